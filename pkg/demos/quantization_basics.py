"""Additive quantization noise model in one picture.

Left: the distortion factor eta(b) — tabulated values up to 5 bits, the
asymptotic (pi*sqrt(3)/2)*2^(-2b) beyond.  Right: post-quantization SNR vs
input SNR for several bit widths, showing the (1-eta)/eta saturation
ceilings that make extra input power useless at low resolution.

Run:  python3 demos/quantization_basics.py
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mmwrx import eta_closed_form, eta_of_bits, quantized_snr_scalar

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

fig, axes = plt.subplots(1, 2, figsize=(11, 4))

bits = np.arange(1, 13)
axes[0].semilogy(bits, [eta_of_bits(int(b)) for b in bits], "o-", label="model (table then asymptotic)")
axes[0].semilogy(bits, [eta_closed_form(int(b)) for b in bits], "--", label="asymptotic form")
axes[0].set(xlabel="ADC bits", ylabel="distortion factor", title="inverse SQNR vs resolution")
axes[0].legend()

gamma_db = np.linspace(-20, 50, 200)
gamma = 10 ** (gamma_db / 10)
for b in (1, 2, 3, 5, 8):
    eta = eta_of_bits(b)
    gq = [quantized_snr_scalar(g, eta) for g in gamma]
    axes[1].plot(gamma_db, 10 * np.log10(gq), label=f"{b} bits")
    axes[1].axhline(10 * np.log10((1 - eta) / eta), color="gray", lw=0.4, ls=":")
axes[1].plot(gamma_db, gamma_db, "k--", lw=0.8, label="unquantized")
axes[1].set(
    xlabel="input SNR (dB)", ylabel="quantized SNR (dB)",
    title="saturation ceilings (1-eta)/eta",
)
axes[1].legend()

fig.tight_layout()
path = os.path.join(OUT, "quantization_basics.png")
fig.savefig(path, dpi=130)
print(f"saved {path}")

for b in (1, 4, 8):
    print(f"b={b}: eta={eta_of_bits(b):.6g}, ceiling={(1 - eta_of_bits(b)) / eta_of_bits(b):8.1f}")
