from fastapi import FastAPI
from config.config import APP_VERSION
from common import config

app: FastAPI = FastAPI(title="OpenValue", version=APP_VERSION)

from routes import valuation_router
app.include_router(valuation_router.router)

from routes import decision_router
app.include_router(decision_router.router)

@app.get("/")
async def root():
    return {"status": "Success", "message": "Welcome to the OpenValue API!", "version": APP_VERSION}

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host=config.api_config.host, port=config.api_config.port,
                log_level=config.log_level.lower())
