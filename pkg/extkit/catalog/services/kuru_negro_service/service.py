from typing import Any, Mapping, Optional, Union

from extkit.catalog.models.kuru_negro_field import KuruNegroField
from extkit.catalog.schemas.entry_schema import KuruNegroParams

from ._service import _euler_kuru_negro_field


def euler_kuru_negro_field(
    params: Optional[Union[KuruNegroParams, Mapping[str, Any]]] = None,
) -> KuruNegroField:
    """The elliptic-integral G of the Euler top, valid on its domain only.

    It is multi-valued globally, so it never seeds an extension; it is meant
    for local residual checks of the first-order ansatz.
    """
    if not isinstance(params, KuruNegroParams):
        params = KuruNegroParams.model_validate(params or {})
    return _euler_kuru_negro_field(params=params)
