"""Classification of bent Boolean functions by extended-Cayley equivalence,
with the bridges to projective two-weight codes, strongly regular graphs and
symmetric-difference-property designs."""

from .boolean_fn import (
    Anf,
    BooleanFunction,
    DimensionMismatch,
    EgaElement,
    NotBent,
    NotBentWeight,
    WalshSpectrum,
    anf_of,
    anf_text,
    apply_ega,
    degree,
    dual,
    dual_via_weight_classes,
    ega_compose,
    ega_identity,
    function_of,
    is_bent,
    support,
    walsh_hadamard,
    weight,
    weight_class,
)
from .codes_designs import (
    BinaryLinearCode,
    BlockDesign,
    TooLarge,
    code_of,
    graph_R,
    has_sdp_property,
    is_projective,
    min_weight_rows_check,
    sdp_design,
    weight_distribution,
)
from .equivalence import (
    Classification,
    QuadraticWitness,
    WrongParity,
    affine_to_translation,
    apply_linear,
    canonical_quadratic,
    cayley_translations,
    classify_et_class,
    dillon_schatz_matrix,
    et_member,
    gl_witness_q0,
    gl_witness_q1,
    is_cayley_equivalent,
    is_extended_cayley_equivalent,
    is_prolific,
    reduce_translation,
    verify_quadratic_theorem,
    weight_class_matrix,
)
from .graph import (
    CanonicalForm,
    CliquePolynomial,
    DenseGraph,
    MalformedGraph6,
    NonzeroAtOrigin,
    SrgParams,
    canonical_form,
    cayley_graph,
    clique_polynomial,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    rank2,
    srg_params,
)
from .ingest import parse_anf, parse_cast128_sboxes, sbox_bit_function
from .sequences import sigma, tau

__version__ = "0.1.0"
