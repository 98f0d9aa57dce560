"""
Run reports emitted by every command
Big values are always strings so reports survive any JSON consumer
"""

import json
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field


class RunReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: str
    success: bool = True
    exit_code: int = 0
    error: Optional[str] = None
    method: Optional[str] = None
    agreement: Optional[bool] = None
    inputs: dict[str, Any] = Field(default_factory=dict)
    outputs: dict[str, Any] = Field(default_factory=dict)
    op_counts: dict[str, Any] = Field(default_factory=dict)
    checks: list[dict[str, Any]] = Field(default_factory=list)
    wall_time_ns: Optional[int] = None

    def to_json(self) -> str:
        """Stable key order, so equal reports print byte-identically"""
        return json.dumps(self.model_dump(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.model_validate(json.loads(text))

    def failed(self, error: str, exit_code: int) -> "RunReport":
        return self.model_copy(update={"success": False, "error": error, "exit_code": exit_code})

    def to_text(self) -> str:
        """Plain key: value lines for terminal output"""
        lines = [f"command: {self.command}"]
        if self.method:
            lines.append(f"method: {self.method}")
        for key, value in sorted(self.outputs.items()):
            lines.append(f"{key}: {_flat(value)}")
        for key, value in sorted(self.op_counts.items()):
            lines.append(f"ops.{key}: {_flat(value)}")
        if self.agreement is not None:
            lines.append(f"agreement: {self.agreement}")
        if self.error:
            lines.append(f"error: {self.error}")
        return "\n".join(lines)


def _flat(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return str(value)
