from ._tomoctx import *  # noqa: F401,F403
