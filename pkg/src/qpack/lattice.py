"""Graph model of the thirteen-qubit surface-code-compatible chip layout.

Qubits sit on the even-parity cells of a 5x5 checkerboard: nine measure
qubits on the both-even cells, four data qubits interleaved on the
both-odd cells.  Nearest neighbors are then the diagonal steps, and six
branched half-wavelength bus resonators cover all sixteen data-measure
couplings.  Every qubit also gets its own readout resonator routed to one
of the thirteen package contacts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import units
from .stackup import ValidationReport

DATA = "data"
MEASURE_X = "measure_x"
MEASURE_Z = "measure_z"
ROLES = (DATA, MEASURE_X, MEASURE_Z)

HALF_WAVELENGTH_BRANCHED = "half_wavelength_branched"

NJU13 = "nju13"


class LayoutParseError(ValueError):
    """Malformed layout config or netlist, with a location hint."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


@dataclass(frozen=True)
class QubitNode:
    id: str
    role: str
    grid_position: tuple[int, int]

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown qubit role {self.role!r}")
        object.__setattr__(self, "grid_position", tuple(self.grid_position))

    @property
    def is_data(self) -> bool:
        return self.role == DATA


@dataclass(frozen=True)
class BusResonator:
    id: str
    endpoints: frozenset[str]
    kind: str = HALF_WAVELENGTH_BRANCHED

    def __post_init__(self):
        object.__setattr__(self, "endpoints", frozenset(self.endpoints))


@dataclass(frozen=True)
class ChipLayout:
    qubits: tuple[QubitNode, ...]
    buses: tuple[BusResonator, ...]
    readout_assignments: tuple[tuple[str, str], ...]  # (qubit id, contact id)
    chip_size: tuple[float, float]  # m
    preset: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits",
                           tuple(sorted(self.qubits, key=lambda q: q.id)))
        object.__setattr__(self, "buses",
                           tuple(sorted(self.buses, key=lambda b: b.id)))
        object.__setattr__(self, "readout_assignments",
                           tuple(sorted(tuple(p) for p in self.readout_assignments)))
        object.__setattr__(self, "chip_size", tuple(self.chip_size))

    def qubit_map(self) -> dict[str, QubitNode]:
        return {q.id: q for q in self.qubits}

    def readout_map(self) -> dict[str, str]:
        return dict(self.readout_assignments)


def grid_adjacent(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a != b and abs(a[0] - b[0]) <= 1 and abs(a[1] - b[1]) <= 1


def coupled_pairs(bus: BusResonator,
                  qubits: dict[str, QubitNode]) -> list[tuple[str, str]]:
    """Qubit pairs a bus couples.

    A two-endpoint bus couples its pair outright; a branched bus couples
    the grid-adjacent pairs among its endpoints.
    """
    ids = sorted(bus.endpoints)
    if len(ids) == 2:
        return [(ids[0], ids[1])]
    pairs = []
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if a in qubits and b in qubits and \
                    grid_adjacent(qubits[a].grid_position, qubits[b].grid_position):
                pairs.append((a, b))
    return pairs


def nju13_layout() -> ChipLayout:
    """The built-in thirteen-qubit preset: 4 data + 9 measure, 6 buses."""
    qubits = []
    data_positions = [(1, 1), (1, 3), (3, 1), (3, 3)]
    for i, pos in enumerate(data_positions, start=1):
        qubits.append(QubitNode(id=f"D{i}", role=DATA, grid_position=pos))
    n_x = n_z = 0
    for r in (0, 2, 4):
        for c in (0, 2, 4):
            if ((r // 2) + (c // 2)) % 2 == 0:
                n_x += 1
                qubits.append(QubitNode(id=f"X{n_x}", role=MEASURE_X,
                                        grid_position=(r, c)))
            else:
                n_z += 1
                qubits.append(QubitNode(id=f"Z{n_z}", role=MEASURE_Z,
                                        grid_position=(r, c)))

    buses = [
        BusResonator("B1", frozenset({"X1", "D1", "Z1", "D2", "X2"})),
        BusResonator("B2", frozenset({"X4", "D3", "Z4", "D4", "X5"})),
        BusResonator("B3", frozenset({"D1", "Z2", "D3"})),
        BusResonator("B4", frozenset({"D2", "Z3", "D4"})),
        BusResonator("B5", frozenset({"D1", "X3", "D2"})),
        BusResonator("B6", frozenset({"D3", "X3", "D4"})),
    ]

    ids = sorted(q.id for q in qubits)
    readout = tuple((qid, f"C{i:02d}") for i, qid in enumerate(ids, start=1))
    return ChipLayout(qubits=tuple(qubits), buses=tuple(buses),
                      readout_assignments=readout,
                      chip_size=(16e-3, 16e-3), preset=NJU13)


def build_layout(config: dict) -> ChipLayout:
    """Build a layout from a config mapping (or the named preset)."""
    if not isinstance(config, dict) or not config:
        raise LayoutParseError("empty or non-mapping layout config", "layout")
    if "preset" in config:
        extra = set(config) - {"preset"}
        if extra:
            raise LayoutParseError(
                f"unknown keys alongside preset: {sorted(extra)}", "layout")
        if config["preset"] != NJU13:
            raise LayoutParseError(f"unknown preset {config['preset']!r}",
                                   "layout.preset")
        return nju13_layout()

    allowed = {"chip_size", "qubits", "buses", "readout"}
    extra = set(config) - allowed
    if extra:
        raise LayoutParseError(f"unknown keys: {sorted(extra)}", "layout")
    for key in allowed:
        if key not in config:
            raise LayoutParseError(f"missing key {key!r}", "layout")

    size = config["chip_size"]
    if not isinstance(size, (list, tuple)) or len(size) != 2:
        raise LayoutParseError("chip_size must be [width, height]",
                               "layout.chip_size")
    chip_size = (units.parse_length(size[0]), units.parse_length(size[1]))

    qubits = []
    for i, entry in enumerate(config["qubits"]):
        loc = f"layout.qubits[{i}]"
        if not isinstance(entry, dict):
            raise LayoutParseError("qubit entry must be a mapping", loc)
        extra = set(entry) - {"id", "role", "position"}
        if extra:
            raise LayoutParseError(f"unknown keys: {sorted(extra)}", loc)
        try:
            pos = entry["position"]
            qubits.append(QubitNode(id=str(entry["id"]), role=entry["role"],
                                    grid_position=(int(pos[0]), int(pos[1]))))
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise LayoutParseError(str(exc), loc) from exc

    buses = []
    for i, entry in enumerate(config["buses"]):
        loc = f"layout.buses[{i}]"
        if not isinstance(entry, dict):
            raise LayoutParseError("bus entry must be a mapping", loc)
        extra = set(entry) - {"id", "endpoints", "kind"}
        if extra:
            raise LayoutParseError(f"unknown keys: {sorted(extra)}", loc)
        try:
            buses.append(BusResonator(
                id=str(entry["id"]),
                endpoints=frozenset(str(e) for e in entry["endpoints"]),
                kind=entry.get("kind", HALF_WAVELENGTH_BRANCHED)))
        except (KeyError, TypeError) as exc:
            raise LayoutParseError(str(exc), loc) from exc

    readout = config["readout"]
    if not isinstance(readout, dict):
        raise LayoutParseError("readout must map qubit id to contact id",
                               "layout.readout")
    assignments = tuple((str(q), str(c)) for q, c in readout.items())
    return ChipLayout(qubits=tuple(qubits), buses=tuple(buses),
                      readout_assignments=assignments, chip_size=chip_size)


def validate_layout(layout: ChipLayout) -> ValidationReport:
    """Check the layout rules; all problems are report entries."""
    v: list[str] = []
    qmap: dict[str, QubitNode] = {}
    positions: dict[tuple[int, int], str] = {}
    for q in layout.qubits:
        if q.id in qmap:
            v.append(f"duplicate qubit id: {q.id}")
        qmap[q.id] = q
        if q.grid_position in positions:
            v.append(f"duplicate position: {q.id} and {positions[q.grid_position]}")
        else:
            positions[q.grid_position] = q.id

    bus_ids = set()
    coupling: set[frozenset[str]] = set()
    for bus in layout.buses:
        if bus.id in bus_ids:
            v.append(f"duplicate bus id: {bus.id}")
        bus_ids.add(bus.id)
        if len(bus.endpoints) < 2:
            v.append(f"bus with fewer than 2 endpoints: {bus.id}")
            continue
        unknown = sorted(e for e in bus.endpoints if e not in qmap)
        for e in unknown:
            v.append(f"bus endpoint unknown: {bus.id} -> {e}")
        if unknown:
            continue
        pairs = coupled_pairs(bus, qmap)
        for a, b in pairs:
            coupling.add(frozenset((a, b)))
            if qmap[a].role == qmap[b].role:
                v.append(f"same-role coupling: {bus.id} couples {a} and {b}")
            if not grid_adjacent(qmap[a].grid_position, qmap[b].grid_position):
                v.append(f"non-adjacent coupling: {bus.id} couples {a} and {b}")
        if not _bus_connected(bus, qmap):
            v.append(f"disconnected bus: {bus.id}")

    # every data qubit must reach each grid-adjacent measure qubit via a bus
    for q in layout.qubits:
        if not q.is_data:
            continue
        for other in layout.qubits:
            if other.is_data or other.id == q.id:
                continue
            if grid_adjacent(q.grid_position, other.grid_position):
                if frozenset((q.id, other.id)) not in coupling:
                    v.append(f"missing coupling: {q.id}-{other.id}")

    rmap: dict[str, str] = {}
    contacts: dict[str, str] = {}
    for qid, cid in layout.readout_assignments:
        if qid not in qmap:
            v.append(f"readout for unknown qubit: {qid}")
            continue
        if qid in rmap:
            v.append(f"multiple readout assignments: {qid}")
        rmap[qid] = cid
        if cid in contacts:
            v.append(f"duplicate contact: {cid} ({contacts[cid]} and {qid})")
        else:
            contacts[cid] = qid
    for q in layout.qubits:
        if q.id not in rmap:
            v.append(f"qubit without readout: {q.id}")

    if layout.preset == NJU13:
        n_data = sum(1 for q in layout.qubits if q.role == DATA)
        n_meas = len(layout.qubits) - n_data
        if len(layout.qubits) != 13:
            v.append(f"preset expects 13 qubits, found {len(layout.qubits)}")
        if n_data != 4 or n_meas != 9:
            v.append(f"preset expects 4 data + 9 measure, found {n_data}+{n_meas}")
        if len(layout.buses) != 6:
            v.append(f"preset expects 6 buses, found {len(layout.buses)}")
        if len(set(contacts)) != 13:
            v.append(f"preset expects 13 contacts, found {len(set(contacts))}")

    return ValidationReport(tuple(v))


def _bus_connected(bus: BusResonator, qmap: dict[str, QubitNode]) -> bool:
    ids = sorted(bus.endpoints)
    if len(ids) == 2:
        return True  # direct pair; adjacency checked separately
    reached = {ids[0]}
    frontier = [ids[0]]
    while frontier:
        cur = frontier.pop()
        for other in ids:
            if other not in reached and grid_adjacent(
                    qmap[cur].grid_position, qmap[other].grid_position):
                reached.add(other)
                frontier.append(other)
    return len(reached) == len(ids)


def export_netlist(layout: ChipLayout) -> str:
    """Deterministic, diffable text form of a layout."""
    lines = ["qpack-netlist v1"]
    if layout.preset:
        lines.append(f"preset {layout.preset}")
    lines.append(f"chipsize {layout.chip_size[0]!r} {layout.chip_size[1]!r}")
    for q in layout.qubits:
        r, c = q.grid_position
        lines.append(f"qubit {q.id} {q.role} {r} {c}")
    for b in layout.buses:
        lines.append(f"bus {b.id} {b.kind} " + " ".join(sorted(b.endpoints)))
    for qid, cid in layout.readout_assignments:
        lines.append(f"readout {qid} {cid}")
    return "\n".join(lines) + "\n"


def parse_netlist(text: str) -> ChipLayout:
    """Rebuild a layout from its netlist export."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "qpack-netlist v1":
        raise LayoutParseError("missing qpack-netlist header", "netlist:1")
    preset = None
    chip_size = None
    qubits: list[QubitNode] = []
    buses: list[BusResonator] = []
    readout: list[tuple[str, str]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        loc = f"netlist:{lineno}"
        kind = parts[0]
        try:
            if kind == "preset":
                preset = parts[1]
            elif kind == "chipsize":
                chip_size = (float(parts[1]), float(parts[2]))
            elif kind == "qubit":
                qubits.append(QubitNode(id=parts[1], role=parts[2],
                                        grid_position=(int(parts[3]), int(parts[4]))))
            elif kind == "bus":
                buses.append(BusResonator(id=parts[1], kind=parts[2],
                                          endpoints=frozenset(parts[3:])))
            elif kind == "readout":
                readout.append((parts[1], parts[2]))
            else:
                raise LayoutParseError(f"unknown record {kind!r}", loc)
        except (IndexError, ValueError) as exc:
            raise LayoutParseError(str(exc), loc) from exc
    if chip_size is None:
        raise LayoutParseError("missing chipsize record", "netlist")
    return ChipLayout(qubits=tuple(qubits), buses=tuple(buses),
                      readout_assignments=tuple(readout), chip_size=chip_size,
                      preset=preset)
