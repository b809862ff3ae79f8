"""Conjugacy classes of positive 3-braids via cyclic equivalence and reflection."""

from .conjugacy import (
    ClassReport,
    Simple,
    are_conjugate,
    class_report,
    conjugate_by_simple,
    cyclic_class,
    positive_conjugates_oracle,
)
from .normal_form import BlockForm, NormalForm, ShapeError, block_form, infimum, normal_form, reflect, to_word
from .structure import PalindromicPower, coincidence, find_ccbar_power, shape_condition, verify_structure_lemma
from .words import ClosureOverflow, InvalidWord, parse_word, relation_neighbors, representatives, rotate

__all__ = [
    "BlockForm",
    "ClassReport",
    "ClosureOverflow",
    "InvalidWord",
    "NormalForm",
    "PalindromicPower",
    "ShapeError",
    "Simple",
    "are_conjugate",
    "block_form",
    "class_report",
    "coincidence",
    "conjugate_by_simple",
    "cyclic_class",
    "find_ccbar_power",
    "infimum",
    "normal_form",
    "parse_word",
    "positive_conjugates_oracle",
    "reflect",
    "relation_neighbors",
    "representatives",
    "rotate",
    "shape_condition",
    "to_word",
    "verify_structure_lemma",
]
