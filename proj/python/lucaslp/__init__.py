"""Lucas-property checks for Fibonacci-type sequences modulo primes."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
