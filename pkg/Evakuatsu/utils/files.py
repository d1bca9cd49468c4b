"""
Чтение и запись файлов: путь (JSON), сценарий (JSON), кусочно-линейная функция (CSV)
"""
import json
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO, Union

from ..core.models import PathInstance, Scenario
from ..core.path_model import validate
from ..pwl import PartialPwl, PwlFunction
from .errors import InputFileError
from .rational import format_rational, parse_rational


def read_json(path: str) -> Any:
    if not os.path.exists(path):
        raise InputFileError(f"Файл {path} не найден")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputFileError(f"{path}: некорректный JSON ({e})") from e


def parse_instance(data: Any) -> PathInstance:
    """
    Путь из словаря {"vertices": [{"position", "w_min", "w_max"}, ...], "capacities": [...]}

    Вместо позиций можно задать "lengths" - длины рёбер; тогда x_0 = 0.

    Raises:
        InputFileError: со списком всех найденных проблем
    """
    issues: List[str] = []
    if not isinstance(data, dict):
        raise InputFileError("Ожидался объект JSON", ["root: не объект"])
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise InputFileError("Нет списка вершин", ["vertices: отсутствует или пуст"])
    capacities_raw = data.get("capacities")
    if not isinstance(capacities_raw, list):
        raise InputFileError("Нет списка ёмкостей", ["capacities: отсутствует"])

    lengths_raw = data.get("lengths")
    positions: List[Fraction] = []
    weight_lo: List[Fraction] = []
    weight_hi: List[Fraction] = []
    for k, vertex in enumerate(vertices):
        if not isinstance(vertex, dict):
            issues.append(f"vertices[{k}]: не объект")
            continue
        for key, target in (("w_min", weight_lo), ("w_max", weight_hi)):
            try:
                target.append(parse_rational(vertex.get(key), f"vertices[{k}].{key}"))
            except InputFileError as e:
                issues.append(str(e))
        if lengths_raw is None:
            try:
                positions.append(parse_rational(vertex.get("position"), f"vertices[{k}].position"))
            except InputFileError as e:
                issues.append(str(e))

    capacities: List[Fraction] = []
    for k, value in enumerate(capacities_raw):
        try:
            capacities.append(parse_rational(value, f"capacities[{k}]"))
        except InputFileError as e:
            issues.append(str(e))

    if lengths_raw is not None:
        if not isinstance(lengths_raw, list):
            issues.append("lengths: ожидался список")
        else:
            positions = [Fraction(0)]
            for k, value in enumerate(lengths_raw):
                try:
                    positions.append(positions[-1] + parse_rational(value, f"lengths[{k}]"))
                except InputFileError as e:
                    issues.append(str(e))
    if issues:
        raise InputFileError("Некорректный файл пути", issues)
    return PathInstance(tuple(positions), tuple(capacities), tuple(weight_lo), tuple(weight_hi))


def load_instance(path: str, check: bool = True) -> PathInstance:
    """Читает путь из JSON; при check=True нарушения инвариантов - InputFileError"""
    instance = parse_instance(read_json(path))
    if check:
        problems = validate(instance)
        if problems:
            raise InputFileError(f"{path}: путь нарушает инварианты", [p.message for p in problems])
    return instance


def parse_scenario(data: Any, instance: Optional[PathInstance] = None) -> Scenario:
    """Сценарий из {"weights": [...]}; с instance проверяется число весов"""
    if not isinstance(data, dict) or not isinstance(data.get("weights"), list):
        raise InputFileError("Ожидался объект с полем weights", ["weights: отсутствует"])
    issues: List[str] = []
    weights: List[Fraction] = []
    for k, value in enumerate(data["weights"]):
        try:
            weight = parse_rational(value, f"weights[{k}]")
        except InputFileError as e:
            issues.append(str(e))
            continue
        if weight < 0:
            issues.append(f"weights[{k}]: отрицательный вес {format_rational(weight)}")
        weights.append(weight)
    if instance is not None and len(data["weights"]) != instance.vertex_count:
        issues.append(f"weights: {len(data['weights'])} значений, а вершин {instance.vertex_count}")
    if issues:
        raise InputFileError("Некорректный файл сценария", issues)
    return Scenario(tuple(weights))


def load_scenario(path: str, instance: Optional[PathInstance] = None) -> Scenario:
    return parse_scenario(read_json(path), instance)


def instance_to_dict(instance: PathInstance, lengths: bool = False) -> Dict[str, Any]:
    """Словарь пути в формате файла (позиции или длины рёбер)"""
    vertices = []
    for k in range(instance.vertex_count):
        vertex = {"w_min": format_rational(instance.weight_lo[k]), "w_max": format_rational(instance.weight_hi[k])}
        if not lengths:
            vertex["position"] = format_rational(instance.positions[k])
        vertices.append(vertex)
    data: Dict[str, Any] = {
        "vertices": vertices,
        "capacities": [format_rational(c) for c in instance.capacities],
    }
    if lengths:
        data["lengths"] = [format_rational(instance.edge_length(k)) for k in range(instance.n)]
    return data


def dump_instance(instance: PathInstance, path: Optional[str] = None, lengths: bool = False) -> str:
    """JSON пути (ключи отсортированы); при path также записывается в файл"""
    text = json.dumps(instance_to_dict(instance, lengths), sort_keys=True, indent=2, ensure_ascii=False)
    if path is not None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    return text


def pwl_rows(f: Union[PwlFunction, PartialPwl]) -> List[List[str]]:
    """
    Строки q, value, slope_right по точкам излома

    В последней точке отрезка наклона справа нет (пусто). Точка со скачком
    в левом конце даёт отдельную строку с точным значением.
    """
    segments = f.segments if isinstance(f, PartialPwl) else (f,)
    rows: List[List[str]] = []
    for segment in segments:
        slopes = segment.slopes
        if segment.left_value is not None:
            rows.append([format_rational(segment.lo), format_rational(segment.left_value), ""])
        for k, (q, value) in enumerate(zip(segment.xs, segment.ys)):
            slope = format_rational(slopes[k]) if k < len(slopes) else ""
            rows.append([format_rational(q), format_rational(value), slope])
    return rows


def dump_pwl_csv(f: Union[PwlFunction, PartialPwl], stream: Union[TextIO, str]) -> None:
    """Записывает функцию в CSV с заголовком q,value,slope_right"""
    lines = ["q,value,slope_right"] + [",".join(row) for row in pwl_rows(f)]
    text = "\n".join(lines) + "\n"
    if isinstance(stream, str):
        with open(stream, "w", encoding="utf-8") as out:
            out.write(text)
    else:
        stream.write(text)
