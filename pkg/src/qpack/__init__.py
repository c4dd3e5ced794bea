"""Simulation, fitting, and validation toolkit for 3D PCB-packaged
superconducting multi-qubit chips.

Subpackages and modules:

* ``qpack.stackup``   -- multi-layer PCB model and DC characterization
* ``qpack.emnet``     -- CPW impedance, two-port networks, cavity modes, crosstalk
* ``qpack.resonator`` -- notch-resonator S21 model and Qi extraction
* ``qpack.cqed``      -- Rabi / cross-resonance dynamics and gate fidelity
* ``qpack.lattice``   -- thirteen-qubit chip layout graph and validation
* ``qpack.presets``   -- the built-in "nju13" package configuration
* ``qpack.cli``       -- command-line front end
"""

__version__ = "0.1.0"
