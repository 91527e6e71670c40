"""Outage and energy-efficiency analysis for UAV-assisted backscatter data collection."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
