"""
PyHasse - certify Hasse principle violations in twists of modular curves.

This module checks the hypotheses under which quadratic twists of X0(N)
by w_N, and of Shimura quotients X^{D+} by w_q, violate the Hasse
principle for a positive density of primes. It builds the prime
condition sets, bounds their densities and enumerates qualifying primes
with self-verifying certificates.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from importlib.metadata import PackageNotFoundError, version

from .configuration import Configuration
from .exceptions import (
    BudgetExceededError,
    HypothesisFailure,
    IntegralityViolation,
    InternalConsistencyError,
    PyHasseError,
    PyHasseInputError,
)
from .twistcert import CurveDescriptor, TwistCertificate, Variant, certify

try:
    __version__ = version("pyhasse")
except PackageNotFoundError:
    __version__ = "unknown"

__all__ = [
    "BudgetExceededError",
    "Configuration",
    "CurveDescriptor",
    "HypothesisFailure",
    "IntegralityViolation",
    "InternalConsistencyError",
    "PyHasseError",
    "PyHasseInputError",
    "TwistCertificate",
    "Variant",
    "certify",
]
