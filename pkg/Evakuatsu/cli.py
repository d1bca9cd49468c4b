"""
Командная строка Evakuatsu: JSON-ответ в stdout, ход работы в stderr
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from .analytics import EvacuationPlots, RunMonitor, plot_pwl
from .core import LoggingState, SolverLogger, optimal_sink, regret, theta, validate
from .core.models import PathInstance, Scenario
from .oracle import GridConfig, SimConfig, check_shift, grid_rmax_scenario, simulate_evacuation, sweep_ropt
from .profile import LEFT, RIGHT, Box, EnvelopeRequest, f_upper, lue, m_edge, m_k, rue
from .regret import RegretSolver
from .utils import EvakuatsuError, InputFileError, RunStats, SolverSettings, SolverState
from .utils.files import dump_pwl_csv, load_instance, load_scenario, parse_instance, read_json
from .utils.rational import format_rational, parse_rational, rational_fields

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

PWL_NAMES = "lue:i:j, rue:i:j, mk:i:j:k, medge:i:j:k, F:i:j:x"


class _Parser(argparse.ArgumentParser):
    """argparse с выходом через SystemExit(2) без печати справки в stdout"""

    def error(self, message):
        self.print_usage(sys.stderr)
        SolverLogger.error(f"Ошибка аргументов: {message}")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="без вывода хода работы")
    common.add_argument("--verbose", action="store_true", help="подробный вывод")
    common.add_argument("--stats", action="store_true", help="статистика построений, времени и памяти")
    common.add_argument("--config", help="путь к YAML с настройками")
    common.add_argument("--instance", required=True, help="JSON-файл пути")

    parser = _Parser(prog="evakuatsu", description="Минимакс сожаления для эвакуации на пути")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("validate", parents=[common], help="проверить путь")

    p = sub.add_parser("evacuate", parents=[common], help="время эвакуации в сток")
    p.add_argument("--scenario", required=True)
    p.add_argument("--sink", required=True)

    p = sub.add_parser("optimal-sink", parents=[common], help="оптимальный сток сценария")
    p.add_argument("--scenario", required=True)

    p = sub.add_parser("regret", parents=[common], help="сожаление стока в сценарии")
    p.add_argument("--scenario", required=True)
    p.add_argument("--sink", required=True)

    p = sub.add_parser("maxregret", parents=[common], help="R_max(P, x)")
    p.add_argument("--sink", required=True)

    sub.add_parser("minmax-regret", parents=[common], help="R_OPT(P)")

    p = sub.add_parser("oracle", parents=[common], help="переборные проверки")
    p.add_argument("check", choices=["simulate", "grid", "sweep", "shift"])
    p.add_argument("--scenario")
    p.add_argument("--sink")
    p.add_argument("--grid", help="шаг сетки h (по умолчанию ширина интервала / 64)")
    p.add_argument("--dt", help="шаг симуляции (по умолчанию длина ребра / 1024)")
    p.add_argument("--samples", type=int, help="число точек для sweep")
    p.add_argument("--trials", type=int, help="число переносов для shift")
    p.add_argument("--seed", type=int)

    p = sub.add_parser("dump-pwl", parents=[common], help=f"CSV функции: {PWL_NAMES}")
    p.add_argument("--name", required=True)
    p.add_argument("--scenario", help="базовый сценарий для lue/rue")
    p.add_argument("--domain", nargs=2, metavar=("LO", "HI"))
    p.add_argument("--output", help="CSV-файл (по умолчанию stdout)")

    p = sub.add_parser("plot", parents=[common], help="PNG-график")
    p.add_argument("kind", choices=["theta", "rmax", "pwl"])
    p.add_argument("--output", required=True)
    p.add_argument("--scenario")
    p.add_argument("--name")
    p.add_argument("--samples", type=int, default=64)
    return parser


def _emit(data: Dict[str, Any]) -> None:
    print(json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2))


def _digits() -> int:
    return SolverState.settings().decimals


def _sink(instance: PathInstance, raw: Optional[str]):
    if raw is None:
        raise InputFileError("Не указан сток", ["--sink: обязательный аргумент"])
    x = parse_rational(raw, "--sink")
    if not instance.positions[0] <= x <= instance.positions[-1]:
        raise InputFileError(f"Сток {raw} вне пути", [f"--sink: {raw} вне [{instance.positions[0]}, {instance.positions[-1]}]"])
    return instance.point(x)


def _scenario(instance: PathInstance, path: Optional[str], default: Optional[Scenario] = None) -> Scenario:
    if path is None:
        if default is not None:
            return default
        raise InputFileError("Не указан сценарий", ["--scenario: обязательный аргумент"])
    SolverLogger.progress(f"Загрузка сценария {path}")
    return load_scenario(path, instance)


# --- Подкоманды ---
def _validate(args) -> int:
    instance = parse_instance(read_json(args.instance))
    issues = validate(instance)
    _emit({
        "ok": not issues,
        "issues": [{"code": i.code, "index": i.index, "message": i.message} for i in issues],
    })
    if issues:
        SolverLogger.error(f"Путь нарушает {len(issues)} инвариант(ов)")
        return EXIT_INVALID
    SolverLogger.success("Путь корректен")
    return EXIT_OK


def _evacuate(args, instance: PathInstance) -> int:
    result = theta(instance, _sink(instance, args.sink), _scenario(instance, args.scenario))
    data = rational_fields({
        "theta_left": result.theta_left,
        "theta_right": result.theta_right,
        "theta": result.theta,
    }, _digits())
    data.update({"lcv": result.lcv, "rcv": result.rcv})
    _emit(data)
    return EXIT_OK


def _optimal_sink(args, instance: PathInstance) -> int:
    best = optimal_sink(instance, _scenario(instance, args.scenario))
    data = rational_fields({"location": best.location.value, "value": best.value}, _digits())
    data["vertex_index"] = best.location.vertex_index
    _emit(data)
    return EXIT_OK


def _regret(args, instance: PathInstance) -> int:
    value = regret(instance, _sink(instance, args.sink), _scenario(instance, args.scenario))
    _emit(rational_fields({"value": value}, _digits()))
    return EXIT_OK


def _maxregret(args, instance: PathInstance) -> int:
    point = _sink(instance, args.sink)
    SolverLogger.progress(f"Вычисление R_max в x = {format_rational(point.value)}")
    _emit(RegretSolver(instance).r_max(point).to_dict(_digits()))
    return EXIT_OK


def _minmax_regret(args, instance: PathInstance) -> int:
    _emit(RegretSolver(instance).r_opt().to_dict(_digits()))
    return EXIT_OK


def _oracle(args, instance: PathInstance) -> int:
    settings = SolverState.settings()
    digits = _digits()
    grid = GridConfig(parse_rational(args.grid, "--grid")) if args.grid else GridConfig.for_instance(instance)
    if args.check == "simulate":
        cfg = SimConfig.for_instance(instance)
        if args.dt:
            cfg = SimConfig(parse_rational(args.dt, "--dt"), cfg.max_time)
        point = _sink(instance, args.sink)
        s = _scenario(instance, args.scenario)
        simulated = simulate_evacuation(instance, point, s, cfg)
        data = rational_fields({
            "simulated": simulated,
            "theta": theta(instance, point, s).theta,
            "dt": cfg.dt,
        }, digits)
    elif args.check == "grid":
        point = _sink(instance, args.sink)
        value, s = grid_rmax_scenario(instance, point, grid)
        data = rational_fields({"value": value, "h": grid.h}, digits)
        data["scenario"] = [format_rational(w) for w in s.weights]
    elif args.check == "sweep":
        samples = args.samples or settings.sweep_samples
        point, value = sweep_ropt(instance, grid, samples)
        data = rational_fields({"location": point.value, "value": value, "h": grid.h}, digits)
    else:
        report = check_shift(instance, args.trials, args.seed)
        data = {
            "trials": report.trials,
            "checked": report.checked,
            "skipped": report.skipped,
            "violations": [
                {"i": v.i, "j": v.j, "delta": format_rational(v.delta), "x": format_rational(v.x),
                 "before": format_rational(v.before), "after": format_rational(v.after)}
                for v in report.violations
            ],
        }
        if not report.ok:
            SolverLogger.warning(f"Нарушений SHIFT: {len(report.violations)}")
    _emit(data)
    return EXIT_OK


def named_function(instance: PathInstance, name: str, base: Optional[Scenario] = None,
                   domain: Optional[Sequence] = None):
    """
    Функция по имени lue:i:j, rue:i:j, mk:i:j:k, medge:i:j:k или F:i:j:x

    Raises:
        InputFileError: неизвестное имя или неверные индексы
    """
    parts = name.split(":")
    kind = parts[0]
    expected = {"lue": 3, "rue": 3, "mk": 4, "medge": 4, "F": 4}
    if kind not in expected or len(parts) != expected[kind]:
        raise InputFileError(f"Неизвестная функция {name!r}", [f"--name: ожидалось одно из {PWL_NAMES}"])
    try:
        if kind == "F":
            i, j, x = int(parts[1]), int(parts[2]), parse_rational(parts[3], "x")
        else:
            indices = [int(p) for p in parts[1:]]
    except ValueError:
        raise InputFileError(f"Некорректные индексы в {name!r}", [f"--name: {name}"]) from None

    if kind in ("lue", "rue"):
        i, j = indices
        instance.check_index(i)
        base = base or instance.lower_scenario()
        lo, hi = domain if domain is not None else (instance.weight_lo[i], instance.weight_hi[i])
        request = EnvelopeRequest(base, i, j, LEFT if kind == "lue" else RIGHT, lo, hi)
        return lue(instance, request) if kind == "lue" else rue(instance, request)
    if kind == "F":
        return f_upper(instance, i, j, x, domain)
    i, j, k = indices
    instance.check_index(i)
    instance.check_index(j, "j")
    box = Box(instance.weight_lo[i], instance.weight_hi[i], instance.weight_lo[j], instance.weight_hi[j])
    profile = m_k(instance, i, j, k, box) if kind == "mk" else m_edge(instance, i, j, k, box)
    return profile.partial


def _dump_pwl(args, instance: PathInstance) -> int:
    base = _scenario(instance, args.scenario, instance.lower_scenario())
    domain = [parse_rational(v, "--domain") for v in args.domain] if args.domain else None
    f = named_function(instance, args.name, base, domain)
    if args.output:
        dump_pwl_csv(f, args.output)
        SolverLogger.success(f"Функция {args.name} записана в {args.output}")
    else:
        dump_pwl_csv(f, sys.stdout)
    return EXIT_OK


def _plot(args, instance: PathInstance) -> int:
    if args.kind == "theta":
        path = EvacuationPlots(instance).plot_theta(_scenario(instance, args.scenario), args.output, args.samples)
    elif args.kind == "rmax":
        path = EvacuationPlots(instance).plot_rmax(args.output, args.samples)
    else:
        if not args.name:
            raise InputFileError("Не указана функция", ["--name: обязательный аргумент для pwl"])
        base = _scenario(instance, args.scenario, instance.lower_scenario())
        path = plot_pwl(named_function(instance, args.name, base), args.output, args.name)
    SolverLogger.success(f"График сохранён в {path}")
    _emit({"output": path})
    return EXIT_OK


COMMANDS = {
    "evacuate": _evacuate,
    "optimal-sink": _optimal_sink,
    "regret": _regret,
    "maxregret": _maxregret,
    "minmax-regret": _minmax_regret,
    "oracle": _oracle,
    "dump-pwl": _dump_pwl,
    "plot": _plot,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Точка входа: разбирает аргументы и выполняет подкоманду

    Returns:
        int: 0 - успех, 1 - ошибка входных данных, 2 - ошибка аргументов
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = SolverSettings.load(args.config)
        SolverState.set(settings)
    except InputFileError as e:
        SolverLogger.error(str(e))
        _emit({"ok": False, "errors": [str(e)] + e.issues})
        return EXIT_INVALID
    LoggingState.initialize(enabled=not (args.quiet or settings.quiet), verbose=args.verbose)
    monitor = RunMonitor() if args.stats else None
    RunStats.reset()

    try:
        if args.command == "validate":
            code = _validate(args)
        else:
            SolverLogger.progress(f"Загрузка пути {args.instance}")
            instance = load_instance(args.instance)
            SolverLogger.success(f"Путь загружен: {instance.vertex_count} вершин")
            code = COMMANDS[args.command](args, instance)
    except EvakuatsuError as e:
        issues = getattr(e, "issues", [])
        SolverLogger.error(f"{e}")
        for issue in issues:
            SolverLogger.error(f"  {issue}")
        _emit({"ok": False, "errors": [str(e)] + list(issues)})
        return EXIT_INVALID

    if monitor is not None:
        RunStats.print_summary()
        monitor.print_summary()
    return code


def main() -> None:
    sys.exit(run())
