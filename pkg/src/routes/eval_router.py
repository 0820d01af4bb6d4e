from fastapi import APIRouter, HTTPException, status

from algebra_models.errors import AlgebraError, DivisionError
from algebra_models.words import GeneratorWord, relation_table
from dto.eval_dto import EvalRequest, EvalResponse, RelationInfo, RelationsResponse
from verification_models.verify import representation

router = APIRouter()


@router.post("/api/eval", response_model=EvalResponse)
async def evaluate(request: EvalRequest):
    """Действие слова на элементе в выбранном представлении"""
    try:
        rep = representation(request.rep, request.kappa)
        word = GeneratorWord.parse(request.word, request.kappa)
        element = rep.parse_element(request.element)
        result = rep.act(word, element)
        if request.d_eq_s:
            result = rep.substitute_d_eq_s(result)
        return EvalResponse(
            rep=request.rep,
            kappa=request.kappa,
            word=str(word),
            element=rep.format_element(element),
            result=rep.format_element(result),
            terms=len(result),
        )
    except DivisionError as e:
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Ошибка точного деления: {str(e)}"
        )
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


@router.get("/api/relations/{kappa}", response_model=RelationsResponse)
async def list_relations(kappa: int):
    """Таблица соотношений (1)-(9) для данного kappa"""
    if kappa < 1:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail="kappa должно быть положительным"
        )
    relations = [
        RelationInfo(label=relation.label, lhs=str(relation.lhs), rhs=str(relation.rhs))
        for relation in relation_table(kappa)
    ]
    return RelationsResponse(kappa=kappa, relations=relations)
