import os

# Число процессов для проверочных наборов (переопределяется переменной окружения)
WORKERS = max(1, int(os.getenv("DAHA_WORKERS", "1")))

# Проверка каждого точного деления обратным умножением
CHECK_DIVISION = os.getenv("DAHA_CHECK_DIVISION", "1").lower() not in ("0", "false", "no")

LOG_LEVEL = os.getenv("DAHA_LOG_LEVEL", "WARNING").upper()

# Источники, которым HTTP API разрешает запросы из браузера (через запятую)
CORS_ORIGINS = [origin.strip() for origin in os.getenv("DAHA_CORS_ORIGINS", "*").split(",") if origin.strip()]

HOST = os.getenv("DAHA_HOST", "127.0.0.1")
PORT = int(os.getenv("DAHA_PORT", "8000"))
