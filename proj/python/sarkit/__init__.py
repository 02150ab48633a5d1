"""Spotlight-SAR toolkit: simulation, image formation, kernels, reconstruction."""

from ._core import (  # noqa: F401
    SPEED_OF_LIGHT_MPS,
    AcquisitionGeometry,
    ComplexImage,
    PhaseHistory,
    SceneSpec,
    add_noise,
    apply_random_phases,
    apply_window,
    backprojection,
    dirichlet,
    expected_coefficient_power,
    expected_partial_sum_power,
    grid_and_fft,
    h_kernel,
    kernel2d,
    matched_filter,
    max_crossrange_radius,
    max_scene_radius,
    monte_carlo_partial_sum_power,
    offset_kernel,
    point_scatterers,
    read_image,
    read_phase_history,
    reconstruct,
    shepp_logan_magnitude,
    simulate_phase_history,
    wavenumber,
    wavenumbers,
    write_image,
    write_phase_history,
)

__all__ = [name for name in dir() if not name.startswith("_")]
