"""Fundamental groups and homotopy relations of bound quiver algebras.

The usual entry points::

    from boundquiver import paper_document, HomotopyRelation
    doc = paper_document()
    R = HomotopyRelation.of_ideal(doc.ideal("I4"), "I4")
    R.fingerprint().tag          # 'finite(2, (2))'
"""
from .algebra import (
    AlgebraElement,
    AlgebraError,
    Ideal,
    Morphism,
    admissible_check,
    apply_morphism,
    bypasses,
    compose_morphism,
    elem_combine,
    elem_multiply,
    element,
    ideal_closure,
    ideal_equal,
    ideal_member,
    identity_morphism,
    invert_morphism,
    make_morphism,
    make_transvection,
)
from .field import FieldError, PrimeField, Rationals
from .fileformat import InputDocument, InputError, format_document, parse_input
from .fpgroups import (
    Answer,
    Decision,
    GroupFingerprint,
    Presentation,
    abelianization,
    classify,
    smith_normal_form,
    tietze_simplify,
    todd_coxeter,
    word_trivial,
)
from .gamma import (
    FamilyError,
    GammaQuiver,
    PresentationFamily,
    analyze,
    build_family,
    build_gamma,
    orbit_search,
)
from .homotopy import (
    HomotopyRelation,
    MinimalSupport,
    canonical_surjection,
    generating_pairs,
    minimal_supports,
    pi1_presentation,
    relation_equal,
    relation_leq,
    walks_homotopic,
)
from .paper import paper_document, verify_paper
from .quiver import (
    Path,
    Quiver,
    QuiverError,
    Walk,
    build_quiver,
    enumerate_paths,
    reduce_walk,
    spanning_tree,
    walk_word,
)

__version__ = "0.1.0"
