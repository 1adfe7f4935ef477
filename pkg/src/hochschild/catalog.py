"""Built-in 5-dimensional nilpotent associative algebras with A^4 = 0, A^3 != 0.

Two families, by the invariant chi = (dim A, dim A^2, ...):

* ``lambda_1`` .. ``lambda_6`` with chi = (5, 2, 1, 0, 0)
* ``mu_1`` .. ``mu_22`` with chi = (5, 3, 1, 0, 0)

Products are stored as printed in the classification; unlisted pairs
multiply to zero.  Coefficients that depend on the parameter alpha are
polynomial templates ``(c0, c1, c2)`` meaning ``c0 + c1*alpha + c2*alpha^2``.

Each entry also carries the published cohomology data (dimensions of
Z^1, B^1, H^1, the listed H^0 span and the number of listed H^1 classes)
so :mod:`hochschild.report` can compare against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra
from .scalar import I, ONE, ZERO, Scalar, as_scalar, format_scalar

__all__ = [
    "CatalogEntry",
    "ExpectedRecord",
    "CatalogError",
    "CHI_LAMBDA",
    "CHI_MU",
    "list_entries",
    "get_entry",
    "instantiate",
    "expected_results",
    "default_bindings",
    "verification_runs",
]

CHI_LAMBDA = (5, 2, 1, 0, 0)
CHI_MU = (5, 3, 1, 0, 0)

ANY = "any"


class CatalogError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "catalog error"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    chi_family: tuple
    products: tuple  # ((i, j, ((k, template), ...)), ...), 1-based
    param_spec: object = None  # None | "any" | frozenset of Scalars
    notes: str = ""

    @property
    def parameterized(self) -> bool:
        return self.param_spec is not None

    def param_description(self) -> str:
        if self.param_spec is None:
            return "none"
        if self.param_spec == ANY:
            return "alpha in C"
        vals = sorted(format_scalar(s) for s in self.param_spec)
        return "alpha in {" + ", ".join(vals) + "}"


@dataclass(frozen=True)
class ExpectedRecord:
    name: str
    alpha: Optional[Scalar]
    dim_z1: int
    dim_b1: int
    dim_h1: int
    h0_span_labels: tuple
    h1_class_count: int
    discrepancy_flags: tuple = ()


def _tpl(x) -> tuple:
    if isinstance(x, tuple):
        return tuple(as_scalar(v) for v in x) + (ZERO,) * (3 - len(x))
    return (as_scalar(x), ZERO, ZERO)


def _eval(tpl: tuple, alpha: Optional[Scalar]) -> Scalar:
    c0, c1, c2 = tpl
    if not c1 and not c2:
        return c0
    if alpha is None:
        raise CatalogError("alpha-dependent coefficient without alpha")
    return c0 + c1 * alpha + c2 * alpha * alpha


# e1e1 = e2, e1e2 = e2e1 = e3 is common to every entry
_BASE = {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 1): {3: 1}}

ALPHA = (0, 1)
ONE_MINUS_A = (1, -1)
ONE_PLUS_A = (1, 1)
MINUS_A = (0, -1)
ONE_MINUS_A2 = (1, 0, -1)
MINUS_A2 = (0, 0, -1)

_LAMBDA = {
    "lambda_1": {(4, 4): {3: 1}, (5, 5): {3: 1}},
    "lambda_2": {(1, 4): {3: 1}, (4, 5): {3: 1}, (5, 4): {3: 1}},
    "lambda_3": {(1, 4): {3: 1}, (5, 5): {3: 1}},
    "lambda_4": {(1, 4): {3: 1}, (4, 4): {3: 1}, (5, 5): {3: 1}},
    "lambda_5": {(4, 5): {3: 1}, (5, 4): {3: -1}},
    "lambda_6": {(4, 4): {3: 1}, (4, 5): {3: 1}, (5, 5): {3: ALPHA}},
}

_MU = {
    "mu_1": {(4, 1): {5: 1}},
    "mu_2": {(4, 1): {5: 1}, (4, 4): {3: 1}},
    "mu_3": {(4, 1): {5: 1}, (4, 2): {3: 1}, (5, 1): {3: 1}},
    "mu_4": {(4, 1): {5: 1}, (4, 2): {3: 1}, (5, 1): {3: 1}, (4, 4): {3: 1}},
    "mu_5": {(1, 4): {5: 1}, (4, 1): {3: 1, 5: 1}},
    "mu_6": {(1, 4): {5: 1}, (4, 1): {3: 1, 5: 1}, (4, 4): {3: 1}},
    "mu_7": {(1, 4): {5: 1}, (4, 1): {5: ALPHA}},
    "mu_8": {(1, 4): {5: 1}, (4, 1): {5: ALPHA}, (4, 4): {3: 1}},
    "mu_9": {(4, 1): {3: 1}, (4, 4): {5: 1}},
    "mu_10": {(1, 4): {5: 1}, (4, 4): {5: 1}},
    "mu_11": {(1, 4): {5: 1}, (4, 4): {3: 1, 5: 1}},
    "mu_12": {(1, 4): {5: 1}, (4, 1): {2: 1, 5: -1}, (5, 1): {3: 1}},
    "mu_13": {(1, 4): {5: 1}, (4, 1): {2: 1, 5: -1}, (4, 4): {3: 1}, (5, 1): {3: 1}},
    "mu_14": {
        (1, 4): {5: 1}, (4, 1): {2: 1, 5: 1}, (4, 2): {3: 2},
        (4, 4): {5: 2}, (5, 1): {3: 1},
    },
    "mu_15": {
        (1, 4): {5: 1}, (4, 1): {2: 1, 5: 1}, (4, 2): {3: 2},
        (4, 4): {3: 1, 5: 2}, (5, 1): {3: 1},
    },
    "mu_16": {
        (1, 4): {5: 1}, (4, 1): {5: 1}, (4, 4): {2: 1},
        (4, 5): {3: 1}, (5, 4): {3: 1},
    },
    "mu_17": {
        (1, 4): {5: 1}, (4, 1): {3: 1, 5: 1}, (4, 4): {2: 1},
        (4, 5): {3: 1}, (5, 4): {3: 1},
    },
    "mu_18": {
        (1, 4): {5: 1}, (4, 1): {5: -1}, (4, 4): {2: 1},
        (5, 4): {3: 1}, (4, 5): {3: -1},
    },
    "mu_19": {
        (1, 4): {5: 1}, (4, 1): {2: 1}, (4, 2): {3: 1},
        (4, 4): {3: 1, 5: 1}, (5, 1): {3: 1},
    },
    "mu_20": {
        (1, 4): {5: 1}, (4, 1): {3: 1, 5: 1}, (4, 4): {2: -1, 5: 2},
        (4, 5): {3: -1}, (5, 4): {3: -1},
    },
    "mu_21": {
        (1, 4): {5: 1}, (4, 1): {2: ONE_MINUS_A, 5: ALPHA}, (4, 2): {3: 2},
        (4, 4): {2: MINUS_A, 3: 1, 5: ONE_PLUS_A}, (4, 5): {3: 1},
        (5, 1): {3: ONE_MINUS_A}, (5, 4): {3: MINUS_A},
    },
    "mu_22": {
        (1, 4): {5: 1}, (4, 1): {2: ONE_MINUS_A, 5: ALPHA}, (4, 2): {3: ONE_MINUS_A2},
        (4, 4): {2: MINUS_A, 5: ONE_PLUS_A}, (4, 5): {3: MINUS_A2},
        (5, 1): {3: ONE_MINUS_A}, (5, 4): {3: MINUS_A},
    },
}

_PARAMS = {
    "lambda_6": ANY,
    "mu_7": ANY,
    "mu_8": ANY,
    "mu_21": frozenset({I, -I}),
    "mu_22": ANY,
}

# published data: (dim Z^1, dim B^1, H^0 span labels, H^1 class count)
_EXPECTED = {
    "lambda_1": (8, 0, ("e1", "e2", "e3", "e4", "e5"), 8),
    "lambda_2": (7, 2, ("e2", "e3", "e5"), 5),
    "lambda_3": (7, 2, ("e2", "e3", "e5"), 5),
    "lambda_4": (6, 2, ("e2", "e3", "e5"), 4),
    "lambda_5": (8, 2, ("e1", "e2", "e3"), 6),
    "lambda_6": (6, 2, ("e1", "e2", "e3"), 4),
    "mu_1": (8, 2, ("e2", "e3", "e5"), 6),
    "mu_2": (7, 2, ("e2", "e3", "e5"), 5),
    "mu_3": (7, 4, ("e3",), 3),
    "mu_4": (6, 4, ("e3",), 2),
    "mu_5": (8, 2, ("e2", "e3", "e5"), 6),
    "mu_6": (7, 2, ("e2", "e3", "e5"), 5),
    "mu_7": (8, 2, ("e1", "e2", "e3", "e4", "e5"), 6),
    "mu_8": (7, 2, ("e1", "e2", "e3", "e4", "e5"), 5),
    "mu_9": (6, 2, ("e2", "e3", "e5"), 4),
    "mu_10": (6, 2, ("e2", "e3", "e5"), 4),
    "mu_11": (5, 2, ("e2", "e3", "e5"), 3),
    "mu_12": (7, 3, ("e2", "e3"), 4),
    "mu_13": (6, 3, ("e2", "e3"), 3),
    "mu_14": (6, 4, ("e3",), 2),
    "mu_15": (5, 4, ("e3",), 1),
    "mu_16": (6, 0, ("e1", "e2", "e3", "e4", "e5"), 6),
    "mu_17": (5, 2, ("e2", "e3", "e5"), 3),
    "mu_18": (5, 3, ("e2", "e3"), 2),
    "mu_19": (6, 4, ("e3",), 2),
    "mu_20": (6, 2, ("e2", "e3", "e5"), 4),
    "mu_21": (5, 4, ("e1", "-e5", "e3", "e5"), 1),
    "mu_22": (6, 4, ("e3",), 2),
}

# rows whose published H^0 is known to disagree with the listed constants
_FLAGS = {
    "mu_7": ("h0",),
    "mu_8": ("h0",),
    "mu_21": ("h0",),
}

_NOTES = {
    "mu_7": "published center is the whole algebra, but e1e4 = e5 while e4e1 = alpha e5",
    "mu_8": "published center is the whole algebra, but e1e4 = e5 while e4e1 = alpha e5",
    "mu_21": "published center list {e1, -e5, e3, e5} is linearly dependent",
}

_DEFAULT_ALPHAS = {
    "lambda_6": (Scalar(2),),
    "mu_7": (Scalar(2),),
    "mu_8": (Scalar(2),),
    "mu_21": (I, -I),
    "mu_22": (Scalar(2), I),
}


def _build() -> dict:
    out = {}
    for fam, chi, table in (("lambda", CHI_LAMBDA, _LAMBDA), ("mu", CHI_MU, _MU)):
        for name, extra in table.items():
            prods = {**_BASE, **extra}
            products = tuple(
                (i, j, tuple((k, _tpl(v)) for k, v in sorted(terms.items())))
                for (i, j), terms in sorted(prods.items())
            )
            out[name] = CatalogEntry(
                name=name,
                chi_family=chi,
                products=products,
                param_spec=_PARAMS.get(name),
                notes=_NOTES.get(name, ""),
            )
    return out


_ENTRIES = _build()


def list_entries() -> list[CatalogEntry]:
    """All entries in catalog order (lambda_1..lambda_6, mu_1..mu_22)."""
    return list(_ENTRIES.values())


def get_entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None


def _check_alpha(entry: CatalogEntry, alpha) -> Optional[Scalar]:
    if entry.param_spec is None:
        if alpha is not None:
            raise CatalogError(f"{entry.name} takes no parameter")
        return None
    if alpha is None:
        raise CatalogError(f"{entry.name} requires alpha ({entry.param_description()})")
    alpha = as_scalar(alpha)
    if entry.param_spec != ANY and alpha not in entry.param_spec:
        raise CatalogError(
            f"alpha={format_scalar(alpha)} not allowed for {entry.name} "
            f"({entry.param_description()})"
        )
    return alpha


def instantiate(name: str, alpha=None) -> Algebra:
    entry = get_entry(name)
    alpha = _check_alpha(entry, alpha)
    products = {}
    for i, j, terms in entry.products:
        vals = {k: _eval(t, alpha) for k, t in terms}
        vals = {k: v for k, v in vals.items() if v}
        if vals:
            products[(i, j)] = vals
    params = {"alpha": alpha} if alpha is not None else {}
    return Algebra.from_products(name, 5, products, params=params)


def expected_results(name: str, alpha=None) -> ExpectedRecord:
    """Published data for an entry; the tables do not depend on alpha."""
    entry = get_entry(name)
    if alpha is not None:
        alpha = _check_alpha(entry, alpha)
    z1, b1, h0, h1_classes = _EXPECTED[name]
    return ExpectedRecord(
        name=name,
        alpha=alpha,
        dim_z1=z1,
        dim_b1=b1,
        dim_h1=z1 - b1,
        h0_span_labels=h0,
        h1_class_count=h1_classes,
        discrepancy_flags=_FLAGS.get(name, ()),
    )


def default_bindings(name: str) -> tuple:
    """Alpha values used for verification runs (``(None,)`` if unparameterized)."""
    get_entry(name)
    return _DEFAULT_ALPHAS.get(name, (None,))


def verification_runs() -> list[tuple[str, Optional[Scalar]]]:
    return [(e.name, a) for e in list_entries() for a in default_bindings(e.name)]


def label_vector(label: str, dim: int = 5) -> tuple:
    """Coordinates of a signed basis label such as ``"e3"`` or ``"-e5"``."""
    sign = ONE
    s = label.strip()
    if s.startswith("-"):
        sign, s = -ONE, s[1:]
    if not s.startswith("e") or not s[1:].isdigit():
        raise ValueError(f"bad basis label {label!r}")
    k = int(s[1:])
    if not 1 <= k <= dim:
        raise ValueError(f"basis label {label!r} out of range")
    return tuple(sign if t == k - 1 else ZERO for t in range(dim))
