"""Performance formulas: SNR, SINR, BER, rates, and the secrecy rate.

The intended receiver sees both beams add coherently: its SNR is

    gamma_b = alpha * Pt * |sqrt(l_ab) + sqrt(l_arb) * N_r|^2 / noise,

since the tuned IRS contributes a factor of exactly N_r (one unit of gain
per element).  A probe elsewhere sees the direct beam through the steering
inner product, the reflect beam through a Dirichlet-kernel gain in the
cosine of its deflection angle, and additionally absorbs artificial noise:

    gamma_e = alpha * Pt * |sqrt(l_ae)*<h_ae, w_a> + sqrt(l_are)*gain|^2
              / ((1-alpha) * Pt * A + noise)

where A is the squared norm of the probe's steering row through the noise
projector (``expected`` mode) or the squared magnitude of one projected
noise draw (``instantaneous`` mode).  Rates are log2(1+gamma) bits per
channel use and the secrecy rate is the clamped difference.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .arrays import ArraySpec, element_cycles, irs_phase_diagonal, steering_vector
from .geometry import LinkBudget, link_budget
from .numerics import q_function
from .transmitter import AnProjector, Precoders, an_projector, complex_normal, make_precoders

AN_MODES = ("expected", "instantaneous")


@dataclass(frozen=True)
class SecrecyMetrics:
    """Link metrics for the intended receiver and one probe position."""

    gamma_b: float
    gamma_e: float
    rate_b: float
    rate_e: float
    rate_s: float
    ber_b: float
    ber_probe: float


def cascaded_gain_bruteforce(
    theta_e: float, theta_b: float, alice: ArraySpec, irs: ArraySpec, phi_ar: float
) -> complex:
    """Reflect-path gain as the literal double sum over transmit and IRS elements.

    Sums exp(2j*pi*(psi1 + psi2)) over every (antenna k, element l) pair and
    divides by the antenna count.  psi1 is the transmit-side cycle difference
    at the IRS departure angle, identically zero because the IRS beam is
    matched to that angle; psi2 is the negated element cycle difference
    applied by the IRS phase matrix.  Kept deliberately naive: this is the
    oracle the closed form is checked against.
    """
    n_a = alice.n_elements
    cyc_ar = element_cycles(alice, phi_ar)
    cyc_e = element_cycles(irs, theta_e)
    cyc_b = element_cycles(irs, theta_b)
    total = 0.0 + 0.0j
    for k in range(n_a):
        psi1 = cyc_ar[k] - cyc_ar[k]
        for l in range(irs.n_elements):
            psi2 = -(cyc_e[l] - cyc_b[l])
            total += cmath.exp(2j * math.pi * (psi1 + psi2))
    return total / n_a


def cascaded_gain_closed(
    theta_e: float, theta_b: float, n_r: int, spacing_wavelengths: float = 0.5
) -> float:
    """Reflect-path gain as a Dirichlet kernel in the deflection-cosine offset.

    Returns sin(n_r*x)/sin(x) with x = pi * spacing * (cos(theta_e) -
    cos(theta_b)).  The removable singularities (x a multiple of pi) are
    evaluated analytically: the tuned direction gives n_r, grating points
    give n_r up to sign.  The magnitude never exceeds n_r.
    """
    if n_r < 1:
        raise ValueError(f"element count must be at least 1, got {n_r}")
    delta = math.cos(theta_e) - math.cos(theta_b)
    scaled = spacing_wavelengths * delta
    nearest = round(scaled)
    if abs(delta - nearest / spacing_wavelengths) < 1e-12:
        return float(n_r) * (-1.0) ** (abs(nearest) * (n_r - 1))
    x = math.pi * scaled
    return math.sin(n_r * x) / math.sin(x)


def rate_bits(gamma: float) -> float:
    """Achievable rate log2(1 + gamma) in bits per channel use."""
    if gamma < 0.0:
        raise ValueError(f"SNR must be non-negative, got {gamma!r}")
    return math.log2(1.0 + gamma)


def secrecy_rate(gamma_b: float, gamma_e: float) -> float:
    """Clamped rate difference [rate_b - rate_e]^+ in bits per channel use."""
    return max(0.0, rate_bits(gamma_b) - rate_bits(gamma_e))


def ber_from_snr(gamma: float, m: int = 4) -> float:
    """Bit error rate of Gray-coded M-PSK at linear SNR ``gamma``.

    (2/log2(M)) * Q(sqrt(2*gamma) * sin(pi/M)); at M=4 this is Q(sqrt(gamma)).
    """
    if gamma < 0.0:
        raise ValueError(f"SNR must be non-negative, got {gamma!r}")
    if m < 2 or (m & (m - 1)) != 0:
        raise ValueError(f"constellation order must be a power of two >= 2, got {m}")
    return (2.0 / math.log2(m)) * q_function(math.sqrt(2.0 * gamma) * math.sin(math.pi / m))


def snr_bob(scenario, budget: LinkBudget) -> float:
    """SNR of the intended receiver with the IRS tuned to it."""
    amplitude = math.sqrt(budget.l_ab) + math.sqrt(budget.l_arb) * scenario.nr
    return scenario.alpha * scenario.pt_mw * amplitude**2 / scenario.noise_mw


def probe_amplitude(scenario, budget: LinkBudget, precoders: Precoders, include_irs=True) -> complex:
    """Coherent signal amplitude reaching the probe, both paths combined."""
    alice = scenario.alice_array()
    h_ae = steering_vector(alice, budget.phi_ae)
    amplitude = math.sqrt(budget.l_ae) * np.vdot(h_ae, precoders.w_a)
    if include_irs:
        irs = scenario.irs_array()
        g_t = steering_vector(alice, budget.phi_ar)
        phase_sum = irs_phase_diagonal(irs, budget.theta_e, budget.theta_b).sum()
        amplitude = amplitude + math.sqrt(budget.l_are) * phase_sum * np.vdot(g_t, precoders.w_r)
    return complex(amplitude)


def an_leak_row(budget: LinkBudget, alice: ArraySpec, projector: AnProjector) -> np.ndarray:
    """Probe steering row propagated through the noise projector."""
    h_ae = steering_vector(alice, budget.phi_ae)
    return h_ae.conj() @ projector.matrix


def sinr_eve(
    scenario,
    budget: LinkBudget,
    precoders: Precoders,
    projector: AnProjector,
    an_mode: str = "expected",
    z: np.ndarray | None = None,
    include_irs: bool = True,
) -> float:
    """SINR at the probe described by ``budget``.

    ``expected`` mode replaces the random projected-noise power by its mean
    (the squared row norm); ``instantaneous`` mode requires a noise draw
    ``z`` and uses that single realization.  ``include_irs=False`` drops the
    reflect-path term for the no-IRS benchmark.
    """
    if an_mode not in AN_MODES:
        raise ValueError(f"an_mode must be one of {AN_MODES}, got {an_mode!r}")
    signal = scenario.alpha * scenario.pt_mw * abs(
        probe_amplitude(scenario, budget, precoders, include_irs)
    ) ** 2
    row = an_leak_row(budget, scenario.alice_array(), projector)
    if an_mode == "expected":
        an_power = float(np.linalg.norm(row) ** 2)
    else:
        if z is None:
            raise ValueError("instantaneous mode needs an artificial-noise draw z")
        an_power = abs(np.dot(row, z)) ** 2
    return signal / ((1.0 - scenario.alpha) * scenario.pt_mw * an_power + scenario.noise_mw)


def probe_setup(scenario, probe):
    """Budgets, precoders, and noise projector for one scenario and probe."""
    bob_budget = link_budget(scenario, scenario.bob)
    probe_budget = link_budget(scenario, probe)
    alice = scenario.alice_array()
    precoders = make_precoders(bob_budget, alice)
    projector = an_projector(steering_vector(alice, bob_budget.phi_ab))
    return bob_budget, probe_budget, precoders, projector


def _metrics_from_gammas(gamma_b: float, gamma_e: float) -> SecrecyMetrics:
    return SecrecyMetrics(
        gamma_b=gamma_b,
        gamma_e=gamma_e,
        rate_b=rate_bits(gamma_b),
        rate_e=rate_bits(gamma_e),
        rate_s=secrecy_rate(gamma_b, gamma_e),
        ber_b=ber_from_snr(gamma_b, 4),
        ber_probe=ber_from_snr(gamma_e, 4),
    )


def _resolve_an_draw(scenario, an_mode: str, z):
    if an_mode == "instantaneous" and z is None:
        return complex_normal(np.random.default_rng(scenario.seed), (scenario.na,))
    return z


def secrecy_metrics(scenario, probe, an_mode: str = "expected", z=None) -> SecrecyMetrics:
    """Full pipeline from scene geometry to rates and BERs for one probe.

    In instantaneous mode a noise draw may be passed explicitly; otherwise
    one is drawn deterministically from the scenario seed.
    """
    bob_budget, probe_budget, precoders, projector = probe_setup(scenario, probe)
    z = _resolve_an_draw(scenario, an_mode, z)
    gamma_b = snr_bob(scenario, bob_budget)
    gamma_e = sinr_eve(scenario, probe_budget, precoders, projector, an_mode, z)
    return _metrics_from_gammas(gamma_b, gamma_e)


def benchmark_no_irs(scenario, probe, an_mode: str = "expected", z=None) -> SecrecyMetrics:
    """Same pipeline with the reflect path removed everywhere.

    The intended receiver keeps only the direct beam, the probe's numerator
    keeps only the direct term; the artificial noise is unchanged.  The
    result does not depend on the IRS element count at all.
    """
    bob_budget, probe_budget, precoders, projector = probe_setup(scenario, probe)
    z = _resolve_an_draw(scenario, an_mode, z)
    gamma_b = scenario.alpha * scenario.pt_mw * bob_budget.l_ab / scenario.noise_mw
    gamma_e = sinr_eve(
        scenario, probe_budget, precoders, projector, an_mode, z, include_irs=False
    )
    return _metrics_from_gammas(gamma_b, gamma_e)


def mc_mean_ber(scenario, signal_mw: float, leak_row: np.ndarray, samples: int, seed) -> float:
    """Average QPSK BER over ``samples`` artificial-noise draws.

    ``signal_mw`` is the received signal power, ``leak_row`` the projected
    steering row the noise leaks through.  Draws come from a dedicated
    generator, so the value is bit-reproducible for a given seed.
    """
    if samples < 1:
        raise ValueError(f"sample count must be at least 1, got {samples}")
    draws = complex_normal(np.random.default_rng(seed), (samples, scenario.na))
    an_power = np.abs(draws @ leak_row) ** 2
    gammas = signal_mw / (
        (1.0 - scenario.alpha) * scenario.pt_mw * an_power + scenario.noise_mw
    )
    return float(np.mean([ber_from_snr(g, 4) for g in gammas]))


def mc_ber(scenario, probe, samples: int, seed) -> float:
    """Monte-Carlo QPSK BER at a probe position under per-draw artificial noise."""
    _, probe_budget, precoders, projector = probe_setup(scenario, probe)
    signal = scenario.alpha * scenario.pt_mw * abs(
        probe_amplitude(scenario, probe_budget, precoders)
    ) ** 2
    row = an_leak_row(probe_budget, scenario.alice_array(), projector)
    return mc_mean_ber(scenario, signal, row, samples, seed)
