"""Arc families on surfaces and the operads they form."""

from .cacti import Cactus, cactus, frame, glue_cacti, perimeter, random_cactus
from .chains import CellwiseFamily, check_face_contracts, compose_families, make_generator
from .circle import (
    BI, D, Q, ExtClass, algebra_relations_check, classify_parameters, compose_angles, homology_compose,
    operad, presentation_check, rd,
)
from .core import (
    ArcFamily, canonical, dot, equals, family, is_exhaustive, projectively_equal, projectivize, relabel,
    twist, unit, validate_family,
)
from .generate import random_family
from .glue import band_refinement, compose_projective, compose_weighted, glue_matched, relaxed_compose
from .laws import run_suite
from .loop import CircleConfiguration, configuration, in_LOOP, loop_of, section_of
from .oracle import oracle_glue
from .render import RenderSpec, render
from .serialize import DocumentError, decode, encode
from .twisted import TwistedElement, compose_twisted, element

__version__ = "0.1.0"
