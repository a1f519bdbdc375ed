"""Induction certificate for 4 <= n <= 6, written to cert.json.

Run: python3 demos/05_certificate.py
"""

from qisv.certificate import build_certificate

cert = build_certificate(max_n=6)
print(cert.summary())
with open("cert.json", "w", encoding="utf-8") as fh:
    fh.write(cert.to_json())
print("wrote cert.json")
