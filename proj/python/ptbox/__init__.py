"""Spectral-Galerkin simulator for a PT-symmetric quantum box with moving walls.

The heavy lifting lives in the compiled ``_ptbox`` extension; this package only
re-exports it and adds a couple of conveniences.
"""

from ._ptbox import (
    ConfigError,
    IntegrationError,
    QuadratureError,
    SimulationConfig,
    TrajectoryError,
    WallKind,
    WallTrajectory,
    __version__,
    average_energy,
    average_force,
    berry_connection,
    berry_phase_analytic,
    berry_phase_numeric,
    coupling_matrix,
    default_time_step,
    integrate,
    integrate_hermitian,
    norm,
    overlap_i2,
    parse_config,
    parse_config_string,
    robin_residual,
    static_eigenfunction,
    static_eigenvalue,
    static_normalization,
)


def populations(result):
    """|C_n(t)|^2 as a (T, N) float array from an ``integrate`` result."""
    c = result["coefficients"]
    return (c * c.conj()).real


def simulate(trajectory=None, **fields):
    """Build a SimulationConfig from keyword fields, validate it and integrate."""
    cfg = SimulationConfig()
    if trajectory is not None:
        cfg.trajectory = trajectory
    for name, value in fields.items():
        if not hasattr(cfg, name):
            raise TypeError(f"unknown config field {name!r}")
        setattr(cfg, name, value)
    cfg.validate()
    return integrate(cfg)
