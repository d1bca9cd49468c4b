# --- Импорт библиотек ---
import sys
from dotenv import load_dotenv
# --- Импорты из Evakuatsu ---
from Evakuatsu.cli import run
load_dotenv()

if __name__ == "__main__":
    sys.exit(run())
