import logging

from fastapi import FastAPI

from core import settings
from routes import check_router, eval_router

# запуск сервера
# uv run uvicorn main:app --reload
#
# http://127.0.0.1:8000/docs

logging.basicConfig(level=settings.LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

app = FastAPI(title="daha-polyrep")

app.include_router(eval_router.router)
app.include_router(check_router.router)
