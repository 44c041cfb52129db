# __init__.py
# Dependencies: numpy graphviz Pillow

__title__ = 'lattice_analysis'
__version__ = '0.1'
__author__ = 'Julien Cassagne <julien.e.cassagne@gmail.com>'
__copyright__ = 'Copyright (c) 2024, all rights reserved. Copying content is expressly prohibited without prior ' \
                'written permission of the University or the authors. '

from .Graph import Graph
from .LatticeException import (
    BadFactors,
    ConsistencyError,
    CycleError,
    DegenerateInterval,
    GraphException,
    InjectivityFailed,
    LatticeException,
    MnTooSmall,
    NoBounds,
    NotALattice,
    NotComparable,
    NotComplemented,
    OutsideInterval,
    ParseError,
    SizeBound,
    SizeOverflow,
    UniverseMismatch,
    UnknownElement,
    UnknownStatement,
)
from .ElementSet import ElementSet, join_set, meet_set
from .Lattice import Lattice, from_covers, from_order
from .Interval import Interval, all_intervals, interval
from .Constructors import direct_product, make_boolean, make_chain, make_mn
from .Structure import (
    find_n5,
    find_n5_through,
    is_antichain,
    is_complemented,
    is_convex,
    is_distributive,
    is_modular,
    is_modular_interval,
    is_rel_complemented,
    iter_pentagons,
)
from .Isomorphism import find_isomorphism, is_isomorphic
from .Complement import (
    InducedReport,
    bar,
    check_induced,
    complements,
    complements_of_set,
    hat,
    induced_by_complements,
    rel_complements,
    rel_complements_of_set,
)
from .Closure import ClosedFamily, closed_family, closure, eq1, is_biclosure_injective, le1
from .CheckReport import CheckReport, CheckStatus
from .Pattern import PatternMatch, find_pattern
from .Verify import (
    STATEMENTS,
    find_biclosure_fixed_point,
    resolve_statements,
    run_statements,
    verify_antichain_iff_n5,
    verify_closure_triple,
    verify_convexity,
    verify_distinct_induced,
    verify_le1_theorem,
    verify_modular_antichain,
    verify_remark_patterns,
    verify_th1,
    verify_th2,
)
from .Enumerate import EnumerationRun, enumerate_lattices, run_suite
from .LatticeReader import LatticeReader, parse_lattice, read_lattice
from .Figures import load_figure
