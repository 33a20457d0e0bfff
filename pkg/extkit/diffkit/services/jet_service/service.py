from typing import Sequence

from extkit.diffkit.models.jet import Jet2, Scalar
from extkit.diffkit.models.phase_point import as_phase_point
from extkit.diffkit.models.scalar_field import ScalarField

from ._service import _eval_jet2, _eval_value


def eval_jet2(field: ScalarField, x: Sequence[float]) -> Jet2:
    return _eval_jet2(field=field, x=as_phase_point(x))


def eval_jet1(field: ScalarField, x: Sequence[float]) -> Jet2:
    return _eval_jet2(field=field, x=as_phase_point(x), order=1)


def eval_value(field: ScalarField, x: Sequence[float]) -> Scalar:
    return _eval_value(field=field, x=as_phase_point(x))
