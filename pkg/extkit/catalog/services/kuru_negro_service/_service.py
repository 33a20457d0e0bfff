import logging

import numpy as np
from fast_depends import inject

from extkit.catalog.models.kuru_negro_field import KuruNegroField
from extkit.catalog.schemas.entry_schema import KuruNegroParams
from extkit.catalog.services.kuru_negro_service import _utils
from extkit.diffkit.models.jet import Jet2
from extkit.diffkit.models.scalar_field import Codomain, ScalarField

logger = logging.getLogger(__name__)


@inject(cast=False)
def _euler_kuru_negro_field(params: KuruNegroParams) -> KuruNegroField:
    def _rule(m):
        if any(isinstance(v, Jet2) for v in m):
            raise TypeError("The Kuru-Negro field is evaluated by value only")
        return _utils.field_value(params, np.asarray(m, dtype=float))

    logger.debug(
        "Built the Kuru-Negro field for I=(%s, %s, %s), sign %+d",
        params.I1,
        params.I2,
        params.I3,
        params.sign,
    )
    return KuruNegroField(
        field=ScalarField(dim=3, rule=_rule, codomain=Codomain.complex, name="G"),
        domain=lambda m: _utils.in_domain(params, np.asarray(m, dtype=float)),
        sign=params.sign,
        c=params.c,
        c0=params.c0,
    )
