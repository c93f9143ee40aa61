from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """불변 도메인 모델 공통 베이스

    Fraction 필드를 그대로 담기 위해 arbitrary type을 허용한다.
    보고서 JSON 키는 필드 이름 (snake_case) 그대로 나가야 하므로 camelCase alias 는 두지 않는다.
    """

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        validate_by_name=True,
        validate_by_alias=True,
    )
