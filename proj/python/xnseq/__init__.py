"""Floor-quotient sequence toolkit."""

from ._xnseq import *  # noqa: F401,F403
