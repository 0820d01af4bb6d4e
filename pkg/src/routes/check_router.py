import logging

from fastapi import APIRouter, HTTPException, status

from algebra_models.errors import AlgebraError
from dto.check_dto import SuiteSizes, SuiteSummary
from dto.eval_dto import CheckRequest
from verification_models.verify import default_sizes, run_suite

router = APIRouter()
logger = logging.getLogger(__name__)


def request_sizes(request: CheckRequest) -> SuiteSizes:
    """Размеры по умолчанию для kappa, поверх них - только явно переданные поля"""
    sizes = default_sizes(request.kappa)
    if request.sizes is None:
        return sizes
    return SuiteSizes(**{**sizes.model_dump(), **request.sizes.model_dump(exclude_unset=True)})


@router.post("/api/check", response_model=SuiteSummary)
def run_check(request: CheckRequest):
    """Запуск проверочного набора; отчёт возвращается и при ненулевом числе ошибок"""
    try:
        summary = run_suite(request.suite, request.kappa, request.seed, request_sizes(request), workers=1)
        if not summary.ok:
            logger.warning("suite %s (kappa=%d) finished with %d failures", request.suite, request.kappa, summary.failures)
        return summary
    except AlgebraError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=str(e)
        )
    except Exception as e:
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Внутренняя ошибка сервера: {str(e)}"
        )
