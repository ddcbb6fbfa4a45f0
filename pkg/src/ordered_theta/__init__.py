"""Ordered theta graphs and constant-memory local routing on them."""

__version__ = "0.1.0"

from .algorithms import (
    GreedyRouter,
    OrderedThetaRouter,
    RouterA,
    ThetaRouter,
    a_down_step,
    a_up_step,
    candidate_check,
    make_router,
    ordered_theta_step,
    route_a,
    theta_step,
)
from .builder import OrderedThetaGraph, build, validate_general_position
from .engine import LocalView, RoutingMemory, Trace, h_neighbourhood, run, views_equal
from .geometry import Point, angle_from_east, cone_index, in_canonical_triangle, projection_distance
from .instances import make_fig3, make_lr, random_points

__all__ = [
    "GreedyRouter", "LocalView", "OrderedThetaGraph", "OrderedThetaRouter", "Point",
    "RouterA", "RoutingMemory", "ThetaRouter", "Trace", "a_down_step", "a_up_step",
    "angle_from_east", "build", "candidate_check", "cone_index", "h_neighbourhood",
    "in_canonical_triangle", "make_fig3", "make_lr", "make_router", "ordered_theta_step",
    "projection_distance", "random_points", "route_a", "run", "theta_step",
    "validate_general_position", "views_equal",
]
