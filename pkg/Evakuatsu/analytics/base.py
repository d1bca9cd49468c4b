"""
Общий стиль PNG-графиков
"""
import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

# Цвета по смыслу кривой
COLORS = {
    'curve': '#ED4245',      # Theta, R_max, PWL
    'left': '#5865F2',       # Theta_L
    'right': '#57F287',      # Theta_R
    'vertex': '#FF6B6B',     # значения в вершинах
    'optimum': '#FF4B4B',    # оптимум и значения со скачком
    'background': '#2F3136',
    'grid': '#40444B'
}

STYLE = {
    'figure.facecolor': COLORS['background'],
    'axes.facecolor': COLORS['background'],
    'axes.edgecolor': COLORS['grid'],
    'grid.color': COLORS['grid'],
    'grid.linestyle': '--',
    'grid.alpha': 0.4,
    'font.weight': 'bold'
}


class PlotBase:
    def __init__(self):
        plt.style.use('dark_background')
        plt.rcParams.update(STYLE)

    def figure(self, title: str, xlabel: str, ylabel: str = ''):
        """Новая фигура 10x6 с сеткой и подписями"""
        fig, ax = plt.subplots(figsize=(10, 6))
        ax.grid(True)
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        return fig, ax

    def save(self, fig, path: str, dpi: int = 150) -> str:
        """Сохраняет фигуру в PNG и закрывает её"""
        fig.savefig(path, format='png', dpi=dpi)
        plt.close(fig)
        return path
