"""
Aplicação FastAPI para cálculo de defasagens e estados ligados no potencial de Varshni
"""

from datetime import datetime

import uvicorn
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from api.routes import health_router, router
from config.settings import Settings
from models.error_models import ScatteringError, get_http_status_for_error
from models.response_models import ErrorResponse
from services.logging_service import LoggingService


# Configurações globais
settings = Settings()
logger = LoggingService(settings.LOG_LEVEL, settings.LOG_FILE, settings.LOG_TO_FILE)

app = FastAPI(
    title="Varshni Semi-Relativistic Scattering",
    description="API para defasagens, normalização e estados ligados da equação de Salpeter sem spin",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(health_router)
app.include_router(router)


@app.on_event("startup")
async def startup_event():
    """Evento executado na inicialização da aplicação"""
    logger.log_info("=== INICIANDO APLICAÇÃO ===")
    logger.log_info(f"Ambiente: {'Desenvolvimento' if settings.is_development else 'Produção'}")
    logger.log_info(f"Host: {settings.HOST}:{settings.PORT}")


@app.on_event("shutdown")
async def shutdown_event():
    """Evento executado no encerramento da aplicação"""
    logger.log_info("=== ENCERRANDO APLICAÇÃO ===")


@app.get("/")
async def root():
    """Endpoint raiz da API"""
    return {
        "message": "Varshni Semi-Relativistic Scattering API",
        "version": "1.0.0",
        "status": "running",
        "timestamp": datetime.now().isoformat(),
        "docs": "/docs",
        "endpoints": {
            "health_check": "/health",
            "phase_shifts": "/api/v1/phase-shifts",
            "bound_states": "/api/v1/bound-states",
            "scan_beta": "/api/v1/scan-beta",
        }
    }


@app.exception_handler(ScatteringError)
async def scattering_exception_handler(request: Request, exc: ScatteringError):
    """Converte erros de domínio, configuração e numéricos na resposta estruturada"""
    status_code = get_http_status_for_error(exc.error_code)
    logger.log_warning(f"{request.url.path}: {exc.error_code.value} - {exc.message}")
    body = ErrorResponse(message=exc.message, error_code=exc.error_code.value, details=exc.details)
    return JSONResponse(status_code=status_code, content=body.to_dict())


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    """Handler global para exceções não tratadas"""
    logger.log_error(exc, "Exceção não tratada")
    return JSONResponse(
        status_code=500,
        content={
            "success": False,
            "error": "Erro interno do servidor",
            "message": str(exc) if settings.DEBUG else "Erro interno",
            "timestamp": datetime.now().isoformat()
        }
    )


if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG,
        log_level=settings.LOG_LEVEL.lower()
    )
