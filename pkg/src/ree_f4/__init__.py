"""Weight-lattice combinatorics of F4 in characteristic 2 under the special
isogeny, and a verdict engine for Ext^1 between simple modules of the Ree
groups 2F4(2^{2s+1}).
"""
from .lattice import Weight, f4, omega
from .isogeny import TAU, TauDigits, assemble, digits, rotate, tilde
from .characters import Character, gamma_set, weyl_character, weyl_dim
from .theoremengine import HypothesisFailed, Outcome, Verdict

__all__ = [
    "Weight", "f4", "omega", "TAU", "TauDigits", "assemble", "digits", "rotate",
    "tilde", "Character", "gamma_set", "weyl_character", "weyl_dim",
    "HypothesisFailed", "Outcome", "Verdict",
]
