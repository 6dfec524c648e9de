from ._codim import *  # noqa: F401,F403
