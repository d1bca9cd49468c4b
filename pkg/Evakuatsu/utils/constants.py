from typing import Union


# Эмодзи для вывода в консоль
class Emojis:
    @staticmethod
    def combine(*emojis: Union[str, 'Emojis']) -> str:
        """
        Объединяет несколько эмодзи в одну строку

        Пример:
        >>> Emojis.combine(Emojis.SUCCESS, Emojis.STATS)
        "✅📊"
        """
        return ''.join(str(emoji) for emoji in emojis)

    # --- STATUS ---
    SUCCESS = "✅"
    ERROR = "❌"
    WARNING = "⚠️"
    LOADING = "🔄"
    STATS = "📊"
    DEBUG = "🔍"
    # --- OTHER ---
    FOLDER = "📁"
    CACHED = "♻️"
    TIMER = "⏱️"
    MEMORY = "💾"


# Семейства слагаемых максимального сожаления
class Families:
    G_J = "G_j"
    G_IJ = "G_ij"
    BAR_G_IJ = "barG_ij"
    H_I = "H_i"
    H_IJ = "H_ij"
    BAR_H_IJ = "barH_ij"

    LEFT = (G_J, G_IJ, BAR_G_IJ)
    RIGHT = (H_I, H_IJ, BAR_H_IJ)
    ALL = LEFT + RIGHT
