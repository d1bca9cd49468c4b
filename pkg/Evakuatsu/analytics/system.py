"""
Время работы и память процесса для --stats
"""
import platform, psutil, time
from datetime import timedelta
from typing import Dict

import humanize

from ..core.logger import SolverLogger


class RunMonitor:
    """Время и память одного запуска"""

    def __init__(self):
        self.start_time = time.time()
        self.process = psutil.Process()

    def get_system_info(self) -> Dict[str, str]:
        """Получить информацию о запуске"""
        memory = self.process.memory_info().rss
        elapsed = timedelta(seconds=time.time() - self.start_time)
        return {
            "elapsed": humanize.precisedelta(elapsed, minimum_unit="milliseconds"),
            "memory": humanize.naturalsize(memory, binary=True),
            "cpu": f"{psutil.cpu_percent()}%",
            "python": platform.python_version(),
            "os": f"{platform.system()} {platform.release()}"
        }

    def print_summary(self) -> None:
        info = self.get_system_info()
        SolverLogger.summary(
            f"Время: {info['elapsed']} • Память: {info['memory']} • CPU: {info['cpu']} • "
            f"Python {info['python']} ({info['os']})"
        )
