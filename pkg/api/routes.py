"""
Rotas da API FastAPI
"""

from typing import List

from fastapi import APIRouter

from config.settings import Settings
from models.base_models import RunRequest, parse_l_spec
from models.response_models import BoundStateRecord, HealthCheckResponse, PhaseShiftRecord, ScanReport
from services.sweep_service import SweepService

settings = Settings()
sweep_service = SweepService(settings)

health_router = APIRouter(tags=["Health"])
router = APIRouter(prefix="/api/v1", tags=["Scattering"])


@health_router.get("/health", response_model=HealthCheckResponse)
def health_check() -> HealthCheckResponse:
    """Verifica se o serviço está no ar"""
    return HealthCheckResponse()


# Rotas síncronas: o cálculo é CPU-bound e o FastAPI as executa no threadpool
@router.post("/phase-shifts", response_model=List[PhaseShiftRecord], response_model_by_alias=True)
def phase_shifts(request: RunRequest) -> List[PhaseShiftRecord]:
    """δ_l, N e λ para cada canal pedido"""
    cfg = request.to_run_config(settings.L_RANGE_GUARD)
    return sweep_service.phase_shift_records(cfg)


@router.post("/bound-states", response_model=List[BoundStateRecord], response_model_by_alias=True)
def bound_states(request: RunRequest) -> List[BoundStateRecord]:
    """Energias dos estados ligados com n ≤ n_max"""
    cfg = request.to_run_config(settings.L_RANGE_GUARD)
    return sweep_service.bound_state_records(cfg)


@router.post("/scan-beta", response_model=ScanReport)
def scan_beta(request: RunRequest) -> ScanReport:
    """
    Varredura de β contra a tabela publicada

    Usa o preset do pedido (padrão equal) e l_max = maior canal de `l`.
    """
    l_max = max(parse_l_spec(request.l, settings.L_RANGE_GUARD))
    return sweep_service.scan_beta(request.preset or "equal", request.a, request.b, request.energy, l_max)
