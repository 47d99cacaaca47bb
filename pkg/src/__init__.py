"""
flagk - exact Pieri-Chevalley computations in the K-theory of flag varieties.

The mathematical modules, bottom-up:
- rootdata: Cartan matrices, roots and weights
- weyl: Weyl groups, Bruhat order, cosets and maximal lifts
- laurent: the group algebra of the weight lattice and Demazure operators
- lspath: LS paths and root operators
- pieri: the expansion of e^lambda [O_{X_w}] and its operator identity
- cohomology: BGG operators and Chevalley's formula in H*(G/B)
"""

__version__ = '1.0.0'

from src.cohomology import classical_chevalley, schubert_rep
from src.laurent import LaurentPoly, demazure_character, demazure_T_word, point_class
from src.lspath import LSPath, generate_paths, path_character
from src.pieri import Expansion, chevalley_cross_check, expand, verify_operator_identity
from src.rootdata import RootSystem, build_root_system
from src.weyl import WeylElt, WeylGroup, generate_group

__all__ = [
    'RootSystem',
    'build_root_system',
    'WeylElt',
    'WeylGroup',
    'generate_group',
    'LaurentPoly',
    'demazure_T_word',
    'demazure_character',
    'point_class',
    'LSPath',
    'generate_paths',
    'path_character',
    'Expansion',
    'expand',
    'verify_operator_identity',
    'chevalley_cross_check',
    'schubert_rep',
    'classical_chevalley',
]
