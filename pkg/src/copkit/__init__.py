"""Degree reduction for the game of Cops and Robbers, with an exact solver."""
from .gadgets import build_digraph_gadget, build_gadget, choose_m
from .graph import Digraph, Graph, components, gnp, gnp_digraph, named_graph, parse_graph, serialize
from .lift import lift_robber_policy, verify_escape
from .meyniel import greedy_cop_cover, meyniel_pipeline
from .play import extract_policies, simulate
from .solver import GameState, SolveResult, cop_number, cops_win
from .transforms import digraph_transform, hat_transform, iterate_to_subcubic, verify_transform_bounds

__all__ = [
    "Digraph", "GameState", "Graph", "SolveResult", "build_digraph_gadget", "build_gadget", "choose_m",
    "components", "cop_number", "cops_win", "digraph_transform", "extract_policies", "gnp", "gnp_digraph",
    "greedy_cop_cover", "hat_transform", "iterate_to_subcubic", "lift_robber_policy", "meyniel_pipeline",
    "named_graph", "parse_graph", "serialize", "simulate", "verify_escape", "verify_transform_bounds",
]
