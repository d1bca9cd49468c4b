from fractions import Fraction

import matplotlib.pyplot as plt

from Evakuatsu.analytics import COLORS, EvacuationPlots, PlotBase, RunMonitor, plot_pwl
from Evakuatsu.core import LoggingState
from Evakuatsu.profile import Box, m_edge
from Evakuatsu.pwl import PwlFunction
from Evakuatsu.regret import RegretSolver

from .conftest import scenario


def test_plot_theta(t1, tmp_path):
    path = EvacuationPlots(t1).plot_theta(scenario(1, 0, 1), str(tmp_path / "theta.png"), samples=8)
    assert (tmp_path / "theta.png").stat().st_size > 0
    assert path.endswith("theta.png")


def test_plot_rmax_reuses_solver(t1, tmp_path):
    solver = RegretSolver(t1)
    EvacuationPlots(t1).plot_rmax(str(tmp_path / "rmax.png"), samples=4, solver=solver)
    assert (tmp_path / "rmax.png").exists()
    assert len(solver.profiles) > 0


def test_plot_pwl_with_jump(tmp_path):
    f = PwlFunction.from_points((0, 1), (1, 2), left_value=0)
    plot_pwl(f, str(tmp_path / "f.png"), "f")
    assert (tmp_path / "f.png").exists()


def test_plot_profile(t1, tmp_path):
    profile = m_edge(t1, 0, 2, 1, Box(0, 2, 0, 2))
    plot_pwl(profile, str(tmp_path / "profile.png"))
    assert (tmp_path / "profile.png").exists()


def test_run_monitor_summary(capsys):
    monitor = RunMonitor()
    info = monitor.get_system_info()
    assert set(info) == {"elapsed", "memory", "cpu", "python", "os"}
    LoggingState.initialize(enabled=True)
    monitor.print_summary()
    assert "Память" in capsys.readouterr().err


def test_logging_disabled_is_silent(capsys):
    RunMonitor().print_summary()
    assert capsys.readouterr().err == ""


def test_plot_base_figure_uses_dark_style(tmp_path):
    plots = PlotBase()
    fig, ax = plots.figure("R_max", "x", "y")
    assert ax.get_title() == "R_max"
    assert ax.get_xlabel() == "x"
    assert plt.rcParams["axes.facecolor"] == COLORS["background"]
    assert set(COLORS) == {"curve", "left", "right", "vertex", "optimum", "background", "grid"}
    plots.save(fig, str(tmp_path / "empty.png"))
    assert not plt.get_fignums()
