"""Skew diagrams, skew Schur functions and skew-equivalence."""

from ._skewlab import (
    SkewError,
    SkewShape,
    amalgamate,
    amalgamated_compose,
    build_staircase,
    characters,
    classify,
    components,
    compose_alpha,
    compose_beta,
    concat,
    detect_staircase,
    enumerate_connected,
    equivalent,
    expand,
    frobenius_rank,
    invariants,
    jacobi_trudi,
    kostka,
    near_concat,
    parse_ascii,
    parse_compact,
    pictures,
    ribbon,
    ribbon_composition,
    run_cli,
    staircase,
    verify_sporadics,
)


def shape(text):
    """Parse a diagram given as "5,4,3/3,1" or as rows of X and '.'."""
    if "X" in text or "x" in text or "#" in text:
        return parse_ascii(text)
    return parse_compact(text)


__all__ = [name for name in dir() if not name.startswith("_")]
