import uvicorn

from config import config, configure_logging

if __name__ == "__main__":
    configure_logging()
    uvicorn.run(
        "api:app",
        host=config.get("api", "host"),
        port=config.getint("api", "port"),
        reload=True,
        loop="asyncio",
    )
