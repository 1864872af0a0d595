"""Kneading sequences, Zagier reduction of indefinite binary quadratic forms,
and the correspondence between the two."""

from .errors import KneadingError
from .sequences import (
    pinch_left,
    pinch_right,
    knead,
    unknead,
    kneading_cycle,
    seq_sum,
    length_parity,
)
from .continuants import continuant, alternant, cf_expand
from .forms import (
    QForm,
    discriminant,
    sl2_act,
    is_zagier_reduced,
    reducing_number,
    reduce_step,
    reduce_to_reduced,
    reduction_cycle,
    enumerate_reduced,
)
from .correspondence import DiscSpec, psi, phi, spec_of_sequence, specs_of_discriminant
from .pell import pell4, reduce_via_kneading

__version__ = "0.1.0"
