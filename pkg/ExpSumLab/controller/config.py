"""
Problem configuration: a polynomial over F_q and the run options, read
from TOML files of the form

    [problem]
    p = 2
    m = 1
    n = 1
    D = [[3]]
    f = [{ d = [3], c = "1" }]

    [run]
    kmax = 4
    rmax_budget = 10000000
    precision = 0
    empty_correction = "auto"
    sign_convention = "proof"
    threads = 1
"""

import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Tuple, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ExpSumLab.ff.field import make_field
from ExpSumLab.ff.polynomial import SparsePoly
from ExpSumLab.ff.prime_poly import is_prime
from ExpSumLab.utils.constants import (
    DEFAULT_KMAX,
    DEFAULT_POINT_BUDGET,
    DEFAULT_THREADS,
    EMPTY_CORRECTION_AUTO,
    EMPTY_CORRECTION_MODES,
    SIGN_CONVENTIONS,
    SIGN_PROOF,
)
from ExpSumLab.utils.errors import ConfigError

Vector = Tuple[int, ...]
Coefficient = Union[str, int, Tuple[int, ...]]


def _vector(value: Any, n: int, what: str) -> Vector:
    if isinstance(value, int) and n == 1:
        value = [value]
    if not isinstance(value, (list, tuple)) or not all(isinstance(a, int) for a in value):
        raise ConfigError(f"{what} must be a list of integers, got {value!r}")
    if len(value) != n or any(a < 0 for a in value):
        raise ConfigError(f"{what} {list(value)} is not a vector in N^{n}")
    return tuple(value)


@dataclass(frozen=True)
class ProblemConfig:
    """
    A problem and its run options.

    Attributes
    ----------
    p, m, n : int
        The prime, q = p^m, and the number of variables.
    D : Tuple[Vector, ...]
        The exponent set; defaults to the exponents of `f`.
    f : Tuple[Tuple[Vector, Coefficient], ...]
        Terms (d, c_d), c_d a string in the generator ``a`` of F_q, an
        integer or a coefficient list.
    kmax : int
        Largest T-degree compared.
    rmax_budget : int
        Largest number of points q^(rn) counted.
    precision : int, optional
        p-adic precision K; None for automatic.
    empty_correction : str
        "auto", "on" or "off".
    sign_convention : str
        "proof", "literal" or "both".
    threads : int
        Workers for point counting.
    name : str
        Label used in reports.
    """

    p: int
    m: int
    n: int
    D: Tuple[Vector, ...]
    f: Tuple[Tuple[Vector, Coefficient], ...]
    kmax: int = DEFAULT_KMAX
    rmax_budget: int = DEFAULT_POINT_BUDGET
    precision: Optional[int] = None
    empty_correction: str = EMPTY_CORRECTION_AUTO
    sign_convention: str = SIGN_PROOF
    threads: int = DEFAULT_THREADS
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ConfigError(f"p = {self.p!r} is not a prime")
        if self.m < 1 or self.n < 1:
            raise ConfigError(f"m and n must be positive, got m={self.m}, n={self.n}")
        if not self.f:
            raise ConfigError("f has no terms")
        exponents = [d for d, _ in self.f]
        if len(set(exponents)) != len(exponents):
            raise ConfigError("f lists an exponent twice")
        if len(set(self.D)) != len(self.D):
            raise ConfigError("D lists an exponent twice")
        if set(exponents) != set(self.D):
            missing = sorted(set(self.D) - set(exponents))
            extra = sorted(set(exponents) - set(self.D))
            raise ConfigError(
                f"D must be the exponent set of f (no coefficient for {missing}, not in D: {extra})"
            )
        if self.kmax < 1:
            raise ConfigError(f"kmax must be positive, got {self.kmax}")
        if self.precision is not None and self.precision < 1:
            raise ConfigError(f"precision must be positive, got {self.precision}")
        if self.empty_correction not in EMPTY_CORRECTION_MODES:
            raise ConfigError(f"empty_correction must be one of {EMPTY_CORRECTION_MODES}")
        if self.sign_convention not in SIGN_CONVENTIONS:
            raise ConfigError(f"sign_convention must be one of {SIGN_CONVENTIONS}")
        if self.threads < 1:
            raise ConfigError(f"threads must be positive, got {self.threads}")

    @property
    def q(self) -> int:
        return self.p**self.m

    @classmethod
    def from_terms(
        cls, p: int, m: int, terms: Mapping[Sequence[int], Coefficient], **options
    ) -> "ProblemConfig":
        """Config for sum_d c_d x^d, D taken from the terms."""
        items = []
        n = options.pop("n", None)
        for d, c in terms.items():
            d = (d,) if isinstance(d, int) else tuple(d)
            n = len(d) if n is None else n
            items.append((d, tuple(c) if isinstance(c, list) else c))
        items.sort(key=lambda item: item[0])
        return cls(p=p, m=m, n=n, D=tuple(d for d, _ in items), f=tuple(items), **options)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], name: str = "") -> "ProblemConfig":
        """
        Build a config from the parsed ``[problem]`` and ``[run]`` tables.

        Raises
        ------
        ConfigError
            On missing or malformed keys.
        """
        problem = data.get("problem")
        if not isinstance(problem, Mapping):
            raise ConfigError("configuration needs a [problem] table")
        run = data.get("run", {})
        if not isinstance(run, Mapping):
            raise ConfigError("[run] must be a table")
        unknown = set(run) - {
            "kmax", "rmax_budget", "precision", "empty_correction", "sign_convention", "threads"
        }
        if unknown:
            raise ConfigError(f"unknown [run] keys {sorted(unknown)}")
        try:
            p, m = int(problem["p"]), int(problem.get("m", 1))
            terms = problem["f"]
        except KeyError as error:
            raise ConfigError(f"[problem] is missing {error.args[0]!r}") from error
        except (TypeError, ValueError) as error:
            raise ConfigError(f"malformed [problem] table: {error}") from error
        if not isinstance(terms, list):
            raise ConfigError("f must be an array of {d = [...], c = ...} tables")

        n = problem.get("n")
        if n is None:
            first = terms[0].get("d") if terms and isinstance(terms[0], Mapping) else None
            n = len(first) if isinstance(first, list) else 1
        f = []
        for term in terms:
            if not isinstance(term, Mapping) or "d" not in term or "c" not in term:
                raise ConfigError(f"term {term!r} needs keys d and c")
            c = term["c"]
            if isinstance(c, list):
                c = tuple(c)
            elif not isinstance(c, (str, int)):
                raise ConfigError(f"coefficient {c!r} must be a string, integer or list")
            f.append((_vector(term["d"], n, "exponent"), c))
        f.sort(key=lambda item: item[0])
        D = tuple(_vector(d, n, "exponent") for d in problem.get("D", [d for d, _ in f]))

        precision = run.get("precision", 0)
        return cls(
            p=p,
            m=m,
            n=n,
            D=tuple(sorted(D)),
            f=tuple(f),
            kmax=int(run.get("kmax", DEFAULT_KMAX)),
            rmax_budget=int(run.get("rmax_budget", DEFAULT_POINT_BUDGET)),
            precision=int(precision) if precision else None,
            empty_correction=run.get("empty_correction", EMPTY_CORRECTION_AUTO),
            sign_convention=run.get("sign_convention", SIGN_PROOF),
            threads=int(run.get("threads", DEFAULT_THREADS)),
            name=name,
        )

    def with_overrides(self, **overrides) -> "ProblemConfig":
        """Replace run options; None values leave the option unchanged."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def polynomial(self) -> SparsePoly:
        """f over F_q = `make_field(p, m)`."""
        field_ctx = make_field(self.p, self.m)
        try:
            f = SparsePoly.from_terms(field_ctx, dict(self.f), n=self.n)
        except ValueError as error:
            raise ConfigError(f"cannot read f: {error}") from error
        if set(f.exponents) != set(self.D):
            raise ConfigError("a coefficient of f is zero in F_q; D must be the support of f")
        return f

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "D": [list(d) for d in self.D],
            "f": [
                {"d": list(d), "c": list(c) if isinstance(c, tuple) else c} for d, c in self.f
            ],
            "kmax": self.kmax,
            "precision": self.precision,
            "empty_correction": self.empty_correction,
            "sign_convention": self.sign_convention,
        }


def load_config(path: Union[str, Path]) -> ProblemConfig:
    """
    Read a TOML problem file.

    Raises
    ------
    ConfigError
        If the file cannot be parsed or misses the problem description.
    """
    path = Path(path)
    try:
        with path.open("rb") as handle:
            data = tomllib.load(handle)
    except OSError as error:
        raise ConfigError(f"cannot read {path}: {error}") from error
    except tomllib.TOMLDecodeError as error:
        raise ConfigError(f"{path} is not valid TOML: {error}") from error
    return ProblemConfig.from_dict(data, name=path.stem)
