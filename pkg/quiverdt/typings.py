from typing import Any, Dict, Sequence, Tuple

Json = Dict[str, Any]
DimVec = Tuple[int, ...]
Matrix = Sequence[Sequence[int]]
Witness = Any
