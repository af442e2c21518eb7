"""Shared fixtures: the standard instance table used by registry-wide sweeps."""

from __future__ import annotations

import pytest

from dispersion import make_distribution

# family x parameter grid covering every registry family (42 instances);
# registry-wide regressions iterate over this table
STANDARD_INSTANCES = [
    "gamma:alpha=0.5",
    "gamma:alpha=1",
    "gamma:alpha=2",
    "gamma:alpha=3",
    "weibull:alpha=0.5",
    "weibull:alpha=1",
    "weibull:alpha=1.5",
    "weibull:alpha=2.5",
    "gpd:alpha=0",
    "gpd:alpha=0.1",
    "gpd:alpha=0.3",
    "gpd:alpha=0.45",
    "normal:sigma=0.5",
    "normal",
    "normal:sigma=2",
    "beta:alpha=0.5",
    "beta:alpha=2",
    "beta:alpha=3,beta=2",
    "logistic",
    "erf-hazard",
    "erfi-interval",
    "erfi-unit",
    "damped-hazard:theta=0.05",
    "damped-hazard:theta=0.1",
    "damped-hazard:theta=0.5",
    "normal-mix",
    "normal-mix:sigma1=1,sigma2=3,q=0.5",
    "normal-mix:sigma1=0.5,sigma2=1.5,q=0.3",
    "geometric:p=0.2",
    "geometric:p=0.4",
    "geometric:p=0.5",
    "geometric:p=0.8",
    "zipf:alpha=2.5",
    "zipf:alpha=3",
    "zipf:alpha=4",
    "poisson:theta=0.5",
    "poisson:theta=1",
    "poisson:theta=1.5",
    "poisson:theta=2.5",
    "negbinomial:r=0.5,p=0.5",
    "negbinomial:r=2,p=0.3",
    "negbinomial:r=2,p=0.7",
]

# one spec per family, for per-family loops
FAMILY_REPRESENTATIVE = {
    "gamma": "gamma:alpha=2",
    "weibull": "weibull:alpha=0.5",
    "gpd": "gpd:alpha=0.25",
    "normal": "normal",
    "beta": "beta:alpha=2",
    "logistic": "logistic",
    "erf-hazard": "erf-hazard",
    "erfi-interval": "erfi-interval",
    "erfi-unit": "erfi-unit",
    "damped-hazard": "damped-hazard:theta=0.1",
    "normal-mix": "normal-mix",
    "geometric": "geometric:p=0.5",
    "zipf": "zipf:alpha=3",
    "poisson": "poisson:theta=2",
    "negbinomial": "negbinomial:r=2,p=0.5",
}


@pytest.fixture(scope="session")
def instances():
    return {spec: make_distribution(spec) for spec in STANDARD_INSTANCES}
