"""Theta-palindromic richness of words under involutory antimorphisms.

Words are built over an :class:`Alphabet`; an :class:`Antimorphism` theta is
reversal composed with a letter involution. The modules cover:

* ``core``: words, theta, factor indexes, return words, text formats
* ``palindromic``: theta-palindromic factors, richness and closure
* ``complexity``: C(n), dC(n), P(n) and the complexity inequality
* ``rauzy``: Rauzy graphs and their reduced and super reduced forms
* ``characterize``: equivalent richness criteria, episturmian structure
* ``generators``: periodic, Sturmian, morphic and theta-standard words
"""

__version__ = "0.1.0"

from .core import (
    Alphabet,
    AlphabetError,
    Antimorphism,
    FactorIndex,
    ParseError,
    Word,
    WordSpec,
    apply_theta,
    build_factor_index,
    complete_return_words,
    is_theta_palindrome,
    parse_theta,
    parse_word_spec,
)
from .palindromic import (
    PalindromeTree,
    RichnessReport,
    RichnessWitness,
    gamma,
    is_theta_rich,
    longest_theta_palindromic_suffix,
    rich_prefix_length,
    richness_report,
    theta_palindromic_closure,
    theta_palindromic_factors,
)
from .complexity import (
    ClosureStatus,
    ComplexityProfile,
    closure_under_theta,
    complexity_profile,
    special_factors,
    verify_thm11_sweep,
)
from .rauzy import (
    RauzyGraph,
    SuperReducedGraph,
    cor33_check,
    n_simple_paths,
    rauzy_graph,
    super_reduced_graph,
)
from .characterize import (
    CrossCheck,
    EpisturmianProfile,
    cross_check_characterizations,
    episturmian_profile,
    episturmian_richness_criterion,
    prop51_structure_check,
)
from .generators import (
    BudgetExceeded,
    Morphism,
    WordGenerator,
    builtin_corpus,
    corpus_entry,
    fibonacci,
    morphic_image,
    parse_generator,
    periodic_word,
    psi_steps,
    sturmian_standard,
    theta_standard_with_seed,
    unioccurrence_threshold,
)

__all__ = [name for name in dir() if not name.startswith("_")]
