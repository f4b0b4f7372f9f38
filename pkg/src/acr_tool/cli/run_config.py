"""コマンド実行設定 (pydantic)"""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Command = Literal["table1", "verify-cov", "lemma", "concentrate", "acr", "moments"]

# (n, m) と R のどちらで長さを決めるか
_NEEDS_RATE = {"acr", "concentrate"}
_NEEDS_N = {"moments"}


class RunConfig(BaseModel):
    """1 回のコマンド実行の入力"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    n: Optional[int] = Field(default=None, ge=1)
    n_list: List[int] = Field(default_factory=list)
    m: Optional[int] = Field(default=None, ge=1)
    rate: Optional[float] = Field(default=None, gt=0.0, lt=1.0)
    rates: List[float] = Field(default_factory=list)
    epsilon: Optional[float] = Field(default=None, gt=0.0, lt=1.0)
    functional: Optional[str] = None
    samples: int = Field(default=0, ge=0)
    seed: int = Field(default=0, ge=0)
    alpha: List[float] = Field(default_factory=list)
    grid: Optional[int] = Field(default=None, ge=64)
    tolerance: Optional[float] = Field(default=None, gt=0.0)
    max_nm: Optional[int] = Field(default=None, ge=1)
    n_max: Optional[int] = Field(default=None, ge=1)
    expurgated: bool = False
    brute_force: bool = False
    matrix: Optional[Path] = None
    workers: Optional[int] = Field(default=None, ge=1)
    output_format: Literal["csv", "json"] = "csv"
    output_path: Optional[Path] = None

    @field_validator("n_list")
    @classmethod
    def _positive_lengths(cls, value: List[int]) -> List[int]:
        if any(n < 1 for n in value):
            raise ValueError("n は 1 以上である必要があります")
        return value

    @field_validator("alpha")
    @classmethod
    def _positive_alpha(cls, value: List[float]) -> List[float]:
        if any(not a > 0 for a in value):
            raise ValueError("α は正である必要があります")
        return value

    @model_validator(mode="after")
    def _check_length_contract(self) -> "RunConfig":
        if self.command in _NEEDS_RATE:
            if self.m is not None:
                raise ValueError(f"{self.command} では --m ではなく --rate を指定します")
            if self.rate is None:
                raise ValueError(f"{self.command} には --rate が必要です")
        if self.command in _NEEDS_N:
            if self.n is None:
                raise ValueError("moments には --n が必要です")
            if (self.m is None) == (self.rate is None):
                raise ValueError("--m と --rate のどちらか一方を指定してください")
        if self.command == "concentrate" and not self.n_list:
            raise ValueError("concentrate には --n が必要です")
        if self.samples == 1:
            raise ValueError("モンテカルロには 2 以上の --samples が必要です")
        return self

    def parameters(self) -> Dict[str, Any]:
        """出力ファイルに記録するパラメータ"""
        data = self.model_dump(
            mode="json",
            exclude_none=True,
            exclude={"command", "output_format", "output_path", "workers"},
        )
        return {k: v for k, v in data.items() if v != [] and v is not False}
