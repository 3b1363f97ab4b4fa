"""Named algebras.

Names are the strings accepted by the command line: ``D:n``, ``MO:k``,
``M3``, ``N5``, ``B6``, ``OMLNM``, ``CompAOL11``, ``GD:n``, ``GDM:n`` and
``SANDWICH:<name>``. ``GD:3`` and ``GD(3)`` are both accepted.

Hasse diagrams (``x < y`` lists the covers):

* ``B6``: ``0 < a < b' < 1`` and ``0 < b < a' < 1``; ``'`` swaps the two
  chains crosswise and ``~ = '``.
* ``CompAOL11``: ``0 < u, v``; ``u < a, a', c``; ``v < b, b', c``;
  ``a, a', c < u'``; ``b, b', c < v'``; ``u', v' < 1``.  ``'`` fixes ``c``
  and swaps each primed pair; ``~`` is trivial.
* ``M3`` is ``D2^2 [+] D3`` with ``b = b'``; ``N5`` is ``D3 [+] D4`` (BI only);
  ``OMLNM`` is ``D2^2 [+] D2^3``; ``MO:k`` glues ``k`` copies of ``D2^2``.
* ``GD:n`` is ``D2^n (+) D2^n`` and ``GDM:n`` is ``D2^n (+) D2 (+) D2^n``,
  both with trivial ``~``; ``SANDWICH:K`` is ``D2 (+) K (+) D2``.
"""

from __future__ import annotations

import re
import string

import numpy as np

from .algebra import (FiniteAlgebra, Flavor, TRIVIAL, attach_brouwer, attach_involution,
                      classify, reduct)
from .errors import ParamOutOfRange, UnknownName
from .lattice import FiniteBoundedLattice

GD_MAX = 6


def _chain_labels(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    k = (n - 2) // 2
    names = ["a"] if k == 1 else [f"a{i}" for i in range(1, k + 1)]
    middle = ["c"] if n % 2 and n > 1 else []
    return ["0"] + names + middle + [x + "'" for x in reversed(names)] + ["1"]


def chain(n: int) -> FiniteAlgebra:
    """The ``n``-element chain with its unique involution and trivial ``~``."""
    if n < 1:
        raise ParamOutOfRange(f"chain length must be at least 1, got {n}")
    leq = np.arange(n)[:, None] <= np.arange(n)[None, :]
    L = FiniteBoundedLattice.from_order(leq, 0, n - 1, _chain_labels(n))
    return attach_brouwer(attach_involution(L, np.arange(n)[::-1]), TRIVIAL)


def _boolean_label(mask: int, n: int, letter: str) -> str:
    full = (1 << n) - 1
    if mask == 0:
        return "0"
    if mask == full:
        return "1"
    if n == 2:
        return letter if mask == 1 else letter + "'"
    bits = [i + 1 for i in range(n) if mask >> i & 1]
    if len(bits) == 1:
        return f"{letter}{bits[0]}"
    if len(bits) == n - 1:
        return f"{letter}{(set(range(1, n + 1)) - set(bits)).pop()}'"
    return letter + "".join(map(str, bits))


def boolean(n: int, letter: str = "a") -> FiniteAlgebra:
    """``D2^n`` as a Boolean algebra: element ``i`` is the bit mask ``i``,
    ``'`` is complement and ``~ = '``."""
    if n < 0:
        raise ParamOutOfRange(f"exponent must be non-negative, got {n}")
    size = 1 << n
    m = np.arange(size)
    leq = (m[:, None] & ~m[None, :]) == 0
    L = FiniteBoundedLattice.from_order(leq, 0, size - 1,
                                        [_boolean_label(i, n, letter) for i in range(size)])
    comp = m ^ (size - 1)
    return attach_brouwer(attach_involution(L, comp), comp)


def _from_covers(n, covers, labels, kleene, brouwer):
    L = FiniteBoundedLattice.from_covers(n, 0, n - 1, covers, labels)
    A = attach_involution(L, kleene)
    return A if brouwer is None else attach_brouwer(A, brouwer)


def b6() -> FiniteAlgebra:
    labels = ["0", "a", "b", "a'", "b'", "1"]
    covers = [(0, 1), (1, 4), (4, 5), (0, 2), (2, 3), (3, 5)]
    k = [5, 3, 4, 1, 2, 0]
    return _from_covers(6, covers, labels, k, k)


def comp_aol11() -> FiniteAlgebra:
    labels = ["0", "u", "v", "a", "a'", "c", "b", "b'", "u'", "v'", "1"]
    ix = {s: i for i, s in enumerate(labels)}
    pairs = [("0", "u"), ("0", "v"),
             ("u", "a"), ("u", "a'"), ("u", "c"), ("v", "b"), ("v", "b'"), ("v", "c"),
             ("a", "u'"), ("a'", "u'"), ("c", "u'"), ("b", "v'"), ("b'", "v'"), ("c", "v'"),
             ("u'", "1"), ("v'", "1")]
    swap = {"0": "1", "u": "u'", "v": "v'", "a": "a'", "b": "b'", "c": "c"}
    swap.update({v: k for k, v in swap.items()})
    k = [ix[swap[s]] for s in labels]
    return _from_covers(11, [(ix[a], ix[b]) for a, b in pairs], labels, k, TRIVIAL)


def m3() -> FiniteAlgebra:
    from .constructions import horizontal_sum
    A = horizontal_sum(boolean(2), chain(3), "PBZ")
    return A.relabel(["0", "a", "a'", "1", "b"])


def n5() -> FiniteAlgebra:
    from .constructions import horizontal_sum
    A = horizontal_sum(reduct(chain(3), Flavor.BI), reduct(chain(4), Flavor.BI), "BI")
    return A.relabel(["0", "c", "1", "a", "a'"])


def omlnm() -> FiniteAlgebra:
    from .constructions import horizontal_sum
    return horizontal_sum(boolean(2, "a"), boolean(3, "b"), "PBZ")


def mo(k: int) -> FiniteAlgebra:
    from .constructions import horizontal_sum
    if not 1 <= k <= len(string.ascii_lowercase):
        raise ParamOutOfRange(f"MO:k needs 1 <= k <= 26, got {k}")
    A = boolean(2, "a")
    for i in range(1, k):
        A = horizontal_sum(A, boolean(2, string.ascii_lowercase[i]), "PBZ")
    return A


def _digit_boolean(n: int) -> FiniteBoundedLattice:
    """``D2^n`` with interior elements named by their bits: ``a1``, ``a12``, ..."""
    labels = ["a" + "".join(str(i + 1) for i in range(n) if m >> i & 1) for m in range(1 << n)]
    labels[0], labels[-1] = "0", "1"
    return boolean(n).lattice.relabel(labels)


def gd(n: int) -> FiniteAlgebra:
    from .constructions import aol
    _gd_range(n)
    return aol(_digit_boolean(n), reduct(chain(1), Flavor.BI))


def gdm(n: int) -> FiniteAlgebra:
    from .constructions import aol
    _gd_range(n)
    return aol(_digit_boolean(n), reduct(chain(2), Flavor.BI))


def _gd_range(n: int) -> None:
    if not 1 <= n <= GD_MAX:
        raise ParamOutOfRange(f"GD/GDM need 1 <= n <= {GD_MAX}, got {n}")


# -- advertised classifications ------------------------------------------------

_AOL = {"antiortholattice": True, "pbz": True}


def expected_flags(name: str) -> dict[str, bool]:
    """Flags a catalog entry is documented to have."""
    tag, param = _split(name)
    if tag == "D":
        return dict(_AOL, distributive=True, sdm=True)
    if tag == "MO":
        return {"ortholattice": True, "orthomodular": True, "modular": True,
                "boolean_algebra": param == 1, "pbz": True}
    if tag == "M3":
        return {"pseudo_kleene": True, "paraorthomodular": True, "orthomodular": False,
                "modular": True, "distributive": False, "pbz": True}
    if tag == "N5":
        return {"pseudo_kleene": False, "modular": False}
    if tag == "B6":
        return {"ortholattice": True, "orthomodular": False, "paraorthomodular": False}
    if tag == "OMLNM":
        return {"orthomodular": True, "modular": False, "pbz": True}
    if tag == "COMPAOL11":
        # the drawn lattice has no pentagon, so it is modular (not distributive)
        return dict(_AOL, modular=True, distributive=False)
    if tag in ("GD", "GDM"):
        return dict(_AOL, distributive=True, sdm=param == 1)
    if tag == "SANDWICH":
        return dict(_AOL, sandwich_shape=True, zero_meet_irreducible=True, sdm=True)
    raise UnknownName(name)


# -- name resolution --------------------------------------------------------------

_PLAIN = {"M3": m3, "N5": n5, "B6": b6, "OMLNM": omlnm, "COMPAOL11": comp_aol11}
_PARAM = {"D": chain, "MO": mo, "GD": gd, "GDM": gdm}


def _split(name: str):
    name = name.strip()
    m = re.fullmatch(r"([A-Za-z][A-Za-z0-9]*)\((.+)\)", name)
    if m:
        tag, rest = m.group(1), m.group(2)
    else:
        tag, _, rest = name.partition(":")
    tag = tag.upper()
    if tag == "SANDWICH":
        if not rest:
            raise UnknownName("SANDWICH needs an inner algebra, e.g. SANDWICH:M3")
        return tag, rest
    if tag in _PARAM:
        if not rest.strip().lstrip("-").isdigit():
            raise UnknownName(f"{tag} needs an integer parameter, e.g. {tag}:3")
        return tag, int(rest)
    if tag in _PLAIN and not rest:
        return tag, None
    raise UnknownName(name)


def catalog(name: str) -> FiniteAlgebra:
    """Build a named algebra and confirm its advertised classification."""
    tag, param = _split(name)
    if tag == "SANDWICH":
        from .constructions import sandwich
        A = sandwich(reduct(catalog(param), Flavor.BI))
    elif tag in _PARAM:
        if tag == "D" and param < 1:
            raise ParamOutOfRange(f"D:n needs n >= 1, got {param}")
        A = _PARAM[tag](param)
    else:
        A = _PLAIN[tag]()
    report = classify(A).as_dict()
    for flag, want in expected_flags(name).items():
        if report[flag] != want:
            raise AssertionError(f"{name}: {flag} is {report[flag]}, expected {want}")
    return A


CATALOG_NAMES = ("D:1", "D:2", "D:3", "D:4", "D:5", "MO:1", "MO:2", "M3", "N5", "B6",
                 "OMLNM", "CompAOL11", "GD:1", "GD:2", "GD:3", "GDM:1", "GDM:2", "GDM:3",
                 "SANDWICH:D:3", "SANDWICH:M3", "SANDWICH:MO:2")


def catalog_antiortholattices() -> list[str]:
    """The catalog entries that are antiortholattices with at least 2 elements."""
    return [n for n in CATALOG_NAMES if expected_flags(n).get("antiortholattice")
            and catalog(n).n > 1]
