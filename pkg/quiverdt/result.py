from typing import Optional

from quiverdt.typings import Json, Witness


class Verdict:
    """Outcome of a check.

    A verdict is truthy iff the check passed. On failure it carries the first
    offending dimension vector or degree.

    :param name: Check name.
    :type name: str
    :param passed: Whether the check passed.
    :type passed: bool
    :param witness: First offending input (None on success).
    :type witness: object
    :param detail: One-line description.
    :type detail: str | None

    :ivar name: Check name.
    :vartype name: str
    :ivar passed: Whether the check passed.
    :vartype passed: bool
    :ivar witness: First offending input.
    :vartype witness: object
    :ivar detail: One-line description.
    :vartype detail: str | None
    """

    __slots__ = ("name", "passed", "witness", "detail")

    def __init__(
        self,
        name: str,
        passed: bool,
        witness: Optional[Witness] = None,
        detail: Optional[str] = None,
    ) -> None:
        self.name = name
        self.passed = passed
        self.witness = witness
        self.detail = detail

    @classmethod
    def success(cls, name: str, detail: Optional[str] = None) -> "Verdict":
        return cls(name, True, None, detail)

    @classmethod
    def failure(cls, name: str, witness: Witness, detail: str) -> "Verdict":
        return cls(name, False, witness, detail)

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        if self.passed:
            return f"<Verdict {self.name}: pass>"
        return f"<Verdict {self.name}: fail at {self.witness!r}>"

    def to_json(self) -> Json:
        witness = self.witness
        if isinstance(witness, tuple):
            witness = [list(w) if isinstance(w, tuple) else w for w in witness]
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": witness,
            "detail": self.detail,
        }
