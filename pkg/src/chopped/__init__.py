"""Chopped lattices of the 1960 construction and the cut algorithm for
sectional complements in their ideal lattices."""

from .algorithm import (
    AlgorithmRun,
    Failure,
    Lexicographic,
    ReverseLexicographic,
    SeededRandom,
    apply_c_cut,
    apply_v_cut,
    explore_all_sequences,
    find_c_failures,
    find_v_failures,
    m2_closed_form,
    max_complement_vector,
    minimal_c_failures,
    parse_strategy,
    run_algorithm,
)
from .construction import ChoppedLattice, GlobalElement, Role, build_chopped, enumerate_suborders, global_atoms
from .formula import s1960, split_set
from .lattice import Congruence, FiniteLattice, congruence_lattice, lattices_isomorphic
from .order import CoveringPair, Poset, covering_pairs, downset_lattice, load_poset, parse_poset
from .vectors import (
    Vector,
    atoms_below,
    ideal_from_vector,
    is_compatible,
    parse_vector,
    vector_from_ideal,
    vector_join,
    vector_leq,
    vector_meet,
)

__version__ = "0.1.0"
