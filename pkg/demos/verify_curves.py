"""Compute holomorphic differentials and eigenvalues for a few explicit models.

Run: python3 demos/verify_curves.py
"""

from jacquot.character import age, reid_failures
from jacquot.curves import (
    IncompatibleAutomorphism,
    differential_basis,
    eigencharacter,
    genus,
    parse_automorphism,
    parse_model,
)

CASES = [
    ("y^2 = x(x^7-1)", "(z^2*x, z*y) @ N=14"),
    ("y^3 = x(x^3-1)", "(z^3*x, z*y) @ N=9"),
    ("y^4 = x(x^3-1)", "(z^4*x, z*y) @ N=12"),
    ("y^7 = x(x-1)^2", "(x, z*y) @ N=7"),
    ("y^3 = x(x^5-1)", "(z^3*x, z*y) @ N=15"),
    ("y^2 = x(x^9-1)", "(z^2*x, z*y) @ N=18"),
    # a model that does not admit the map
    ("y^3 = x(x^3-1)", "(z^3*x, z*y) @ N=12"),
]

for model, auto_text in CASES:
    curve = parse_model(model)
    auto, canonical = parse_automorphism(auto_text)
    print(f"\n{model}   {canonical}")
    print(f"  genus {genus(curve)}: " + ", ".join(str(w) for w in differential_basis(curve)))
    try:
        chi = eigencharacter(curve, auto)
    except IncompatibleAutomorphism as exc:
        print(f"  incompatible: {exc}")
        continue
    fails = reid_failures(chi)
    print(f"  exponents {chi.exponents}, age {age(chi)}")
    print(f"  Reid fails for powers {fails}" if fails else "  Reid holds for every power")
