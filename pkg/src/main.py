import uvicorn
from fastapi.middleware.cors import CORSMiddleware

from core import init_api, settings

app = init_api.app

# запросы без cookies, только GET и POST
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=False,
    allow_methods=["GET", "POST"],
    allow_headers=["Content-Type"],
)


if __name__ == "__main__":
    uvicorn.run("main:app", host=settings.HOST, port=settings.PORT)
