from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # largest |X_{r/2}| streamed by enumerate_restricted before refusing
    enumeration_cap: int = 1 << 16
    # exact tensor multiplicities are evaluated only when both highest
    # weights pair with alpha0^vee to at most this (Freudenthal cost)
    exact_multiplicity_pairing: int = 12
    # explicit gamma enumeration in the Frobenius-kernel Hom check up to this pairing
    gamma_enumeration_pairing: int = 64


DEFAULT_LIMITS = Limits()
