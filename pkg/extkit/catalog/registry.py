from typing import Dict

from extkit.catalog.models.catalog_entry import CatalogEntry
from extkit.catalog.schemas.entry_schema import (
    EulerTopParams,
    HarmonicOscillatorParams,
    LotkaVolterraParams,
    Quartic1Params,
    Quartic2Params,
    SquarePolarParams,
    VortexParams,
)
from extkit.catalog.systems import (
    euler_top,
    harmonic_oscillator,
    lotka_volterra,
    quartic,
    square_polar,
    vortex,
)

POLYNOMIAL_NOTES = "globally defined: polynomial in the momenta"

ENTRIES: Dict[str, CatalogEntry] = {
    entry.id: entry
    for entry in (
        CatalogEntry(
            id="quartic1",
            dim=2,
            coordinates=quartic.COORDINATES,
            params_schema=Quartic1Params,
            builder=quartic.build_quartic1,
            intervals=quartic.quartic1_intervals,
            notes=POLYNOMIAL_NOTES,
            has_g=True,
        ),
        CatalogEntry(
            id="quartic2a",
            dim=2,
            coordinates=quartic.COORDINATES,
            params_schema=Quartic2Params,
            builder=quartic.build_quartic2a,
            intervals=quartic.quartic2_intervals,
            notes=POLYNOMIAL_NOTES,
            has_g=True,
            margin=quartic.QUARTIC2_MARGIN,
        ),
        CatalogEntry(
            id="quartic2b",
            dim=2,
            coordinates=quartic.COORDINATES,
            params_schema=Quartic2Params,
            builder=quartic.build_quartic2b,
            intervals=quartic.quartic2_intervals,
            notes=POLYNOMIAL_NOTES + ", verification reported per parameter choice",
            has_g=True,
            margin=quartic.QUARTIC2_MARGIN,
            report_only=True,
        ),
        CatalogEntry(
            id="square_polar",
            dim=4,
            coordinates=square_polar.COORDINATES,
            params_schema=SquarePolarParams,
            builder=square_polar.build,
            intervals=square_polar.intervals,
            notes=POLYNOMIAL_NOTES,
            has_g=True,
            margin=square_polar.MARGIN,
        ),
        CatalogEntry(
            id="vortex_equal",
            dim=4,
            coordinates=vortex.COORDINATES,
            columns=vortex.COLUMNS,
            params_schema=VortexParams,
            builder=vortex.build_equal,
            intervals=vortex.intervals,
            notes="conditionally-single-valued",
            has_g=True,
            margin=vortex.EQUAL_MARGIN,
        ),
        CatalogEntry(
            id="vortex_opposite",
            dim=4,
            coordinates=vortex.COORDINATES,
            columns=vortex.COLUMNS,
            params_schema=VortexParams,
            builder=vortex.build_opposite,
            intervals=vortex.intervals,
            notes="globally defined",
            has_g=True,
            margin=vortex.OPPOSITE_MARGIN,
        ),
        CatalogEntry(
            id="lotka_volterra",
            dim=2,
            coordinates=lotka_volterra.COORDINATES,
            params_schema=LotkaVolterraParams,
            builder=lotka_volterra.build,
            intervals=lotka_volterra.intervals,
            notes=lotka_volterra.NOTES,
            has_g=False,
        ),
        CatalogEntry(
            id="euler_top",
            dim=3,
            coordinates=euler_top.COORDINATES,
            params_schema=EulerTopParams,
            builder=euler_top.build,
            intervals=euler_top.intervals,
            notes=euler_top.NOTES,
            has_g=False,
        ),
        CatalogEntry(
            id="harmonic_oscillator",
            dim=2,
            coordinates=harmonic_oscillator.COORDINATES,
            params_schema=HarmonicOscillatorParams,
            builder=harmonic_oscillator.build,
            intervals=harmonic_oscillator.intervals,
            notes="globally defined: reference system that always extends",
            has_g=True,
            reference=True,
        ),
    )
}
