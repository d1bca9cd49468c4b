from .base import PlotBase, COLORS
from .plots import EvacuationPlots, plot_pwl
from .system import RunMonitor
__all__ = ['PlotBase', 'COLORS', 'EvacuationPlots', 'plot_pwl', 'RunMonitor']
