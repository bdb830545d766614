"""The flat per-a record shared by scans, tables, and checkpoint files.

One ScanRecord collects everything the library knows about a single odd a:
the three matrix shapes, the exclusive symmetry label, the raw rank pair
(m_C - 1, n_C), the criterion verdict, and the number class.  Serialization
is JSON Lines with a fixed key order (including the literal key "class" for
the number class), so scan output is diffable byte-for-byte.
"""

import json
from dataclasses import dataclass

from collatzmat.criterion import classify_number, rank
from collatzmat.matrices import big_shape, little_shape, standard_shape
from collatzmat.symmetry import classify

JSON_KEYS = (
    "a",
    "m_C",
    "n_C",
    "m_L",
    "n_L",
    "m_B",
    "n_B",
    "symmetry",
    "rank_num",
    "rank_den",
    "criterion",
    "class",
)


@dataclass(frozen=True)
class ScanRecord:
    a: int
    m_c: int
    n_c: int
    m_l: int
    n_l: int
    m_b: int
    n_b: int
    symmetry: str
    rank_num: int
    rank_den: int
    criterion: bool
    number_class: str

    def to_dict(self) -> dict:
        """Field values keyed by the serialized names, in JSON_KEYS order."""
        return {
            "a": self.a,
            "m_C": self.m_c,
            "n_C": self.n_c,
            "m_L": self.m_l,
            "n_L": self.n_l,
            "m_B": self.m_b,
            "n_B": self.n_b,
            "symmetry": self.symmetry,
            "rank_num": self.rank_num,
            "rank_den": self.rank_den,
            "criterion": self.criterion,
            "class": self.number_class,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def record_from_dict(data: dict) -> ScanRecord:
    """Inverse of to_dict/to_json_line."""
    return ScanRecord(
        a=data["a"],
        m_c=data["m_C"],
        n_c=data["n_C"],
        m_l=data["m_L"],
        n_l=data["n_L"],
        m_b=data["m_B"],
        n_b=data["n_B"],
        symmetry=data["symmetry"],
        rank_num=data["rank_num"],
        rank_den=data["rank_den"],
        criterion=data["criterion"],
        number_class=data["class"],
    )


def scan_record(a: int) -> ScanRecord:
    """Assemble the full record for one odd a >= 3 from the defining modules."""
    m_c, n_c = standard_shape(a)
    m_l, n_l = little_shape(a)
    m_b, n_b = big_shape(a)
    r = rank(a)
    return ScanRecord(
        a=a,
        m_c=m_c,
        n_c=n_c,
        m_l=m_l,
        n_l=n_l,
        m_b=m_b,
        n_b=n_b,
        symmetry=classify(a).label,
        rank_num=r.numerator,
        rank_den=r.denominator,
        criterion=r.is_integer,
        number_class=classify_number(a),
    )
