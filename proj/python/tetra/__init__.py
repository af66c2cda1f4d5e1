from ._tetra import (
    boundary3,
    boundary4,
    check_qte,
    code_from_polys,
    cohomology,
    enumerate_solutions,
    image_cardinality,
    is_bijective,
    is_solution,
    load_reference,
    orbits,
    permitted_colorings,
    polys_from_code,
    sigma1,
    sigma2,
)

__all__ = [
    "boundary3",
    "boundary4",
    "check_qte",
    "code_from_polys",
    "cohomology",
    "enumerate_solutions",
    "image_cardinality",
    "is_bijective",
    "is_solution",
    "load_reference",
    "orbits",
    "permitted_colorings",
    "polys_from_code",
    "sigma1",
    "sigma2",
]
