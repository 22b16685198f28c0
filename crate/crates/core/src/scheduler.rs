//! Per-frame slot scheduling: link selection, the weighted multi-link
//! flow scheduler (switch and hold variants), five reference schedulers
//! and the constraint verifier.
//!
//! The scheduler layer works on an abstract [`ScheduleInput`]: integer
//! slot demands per candidate route plus the frozen per-slot rates. The
//! engine derives those from the channel model; tests build them
//! directly. All schedulers charge routes the same way, so results are
//! comparable flow for flow:
//!
//! * a BS route charges its demand against that BS,
//! * the satellite-direct route charges its demand against the satellite,
//! * the two-hop relay route charges the feeder demand against the
//!   satellite and feeder + delivery against the airship (the airship
//!   both receives and retransmits inside the same frame).

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

pub const BS_COUNT: usize = 3;
pub const TX_COUNT: usize = 5;

#[derive(Debug, Error, PartialEq)]
pub enum SchedulerError {
    #[error("hold frame requested before any switch frame produced held routes")]
    MissingHeldState,
    #[error("{0:?} is not a baseline scheduler")]
    NotABaseline(Algorithm),
}

/// The five transmitters of the scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Transmitter {
    Bs1,
    Bs2,
    Bs3,
    Airship,
    Satellite,
}

impl Transmitter {
    pub const ALL: [Transmitter; TX_COUNT] = [
        Transmitter::Bs1,
        Transmitter::Bs2,
        Transmitter::Bs3,
        Transmitter::Airship,
        Transmitter::Satellite,
    ];

    pub fn index(self) -> usize {
        match self {
            Transmitter::Bs1 => 0,
            Transmitter::Bs2 => 1,
            Transmitter::Bs3 => 2,
            Transmitter::Airship => 3,
            Transmitter::Satellite => 4,
        }
    }

    pub fn bs(j: usize) -> Transmitter {
        match j {
            0 => Transmitter::Bs1,
            1 => Transmitter::Bs2,
            2 => Transmitter::Bs3,
            _ => panic!("BS index {j} out of range"),
        }
    }
}

impl fmt::Display for Transmitter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Transmitter::Bs1 => "bs1",
            Transmitter::Bs2 => "bs2",
            Transmitter::Bs3 => "bs3",
            Transmitter::Airship => "airship",
            Transmitter::Satellite => "satellite",
        };
        f.write_str(name)
    }
}

/// A downlink route a flow can complete on in one frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Route {
    /// Direct from one base station (0-based index).
    Bs(usize),
    /// Satellite → airship → MR, two hops in one frame.
    SatelliteAirship,
    /// Direct from the satellite.
    Satellite,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Bs(j) => write!(f, "bs{}", j + 1),
            Route::SatelliteAirship => f.write_str("satellite-airship"),
            Route::Satellite => f.write_str("satellite"),
        }
    }
}

/// Slot demands of the two-hop relay route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoHopDemand {
    /// Satellite → airship hop.
    pub feeder: u64,
    /// Airship → MR hop.
    pub delivery: u64,
}

impl TwoHopDemand {
    /// Slots the route books on the airship budget.
    pub fn airship_charge(&self) -> u64 {
        self.feeder.saturating_add(self.delivery)
    }
}

/// Demands and candidacies of one flow over every route. Demands are
/// always present (hold frames need them even off-coverage); candidacy
/// flags gate which routes link selection may pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RouteCosts {
    pub bs_demand: [u64; BS_COUNT],
    pub bs_in_range: [bool; BS_COUNT],
    pub relay_demand: TwoHopDemand,
    pub relay_candidate: bool,
    pub satellite_demand: u64,
    pub satellite_candidate: bool,
}

impl RouteCosts {
    pub fn in_any_bs_range(&self) -> bool {
        self.bs_in_range.iter().any(|&b| b)
    }
}

/// Frozen per-slot rates of every link of the flow's MR, bits/second.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkRates {
    pub bs_bps: [f64; BS_COUNT],
    pub airship_bps: f64,
    pub feeder_bps: f64,
    pub satellite_bps: f64,
}

/// One flow of one frame, as the schedulers see it.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowInput {
    pub id: u32,
    pub mr: u32,
    pub weight: f64,
    pub qos_bps: f64,
    pub costs: RouteCosts,
    pub rates: LinkRates,
}

/// Everything a scheduler needs for one frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleInput {
    pub frame: u64,
    /// Slot budget M of every transmitter.
    pub slots: u64,
    /// Slot duration Δt in seconds (bits accounting).
    pub slot_time: f64,
    pub flows: Vec<FlowInput>,
}

/// Candidate flow sets per link class with the per-BS demand totals Γ.
/// Indices point into `ScheduleInput::flows`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkSets {
    pub bs: [Vec<usize>; BS_COUNT],
    pub airship: Vec<usize>,
    pub satellite: Vec<usize>,
    pub gamma: [u64; BS_COUNT],
}

/// Admission-ordered queues per link, sorted by weight descending, then
/// slot demand ascending, then flow id ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderedQueues {
    pub bs: [Vec<usize>; BS_COUNT],
    pub airship: Vec<usize>,
    pub satellite: Vec<usize>,
}

/// Routes admitted at the last switch frame, carried across hold frames.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeldRoutes {
    pub by_mr: BTreeMap<u32, Route>,
}

/// Slot usage of one transmitter for one flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopUse {
    pub tx: Transmitter,
    /// Slots the transmitter actually sends in.
    pub tx_slots: u64,
    /// Slots booked against the transmitter's budget.
    pub budget_slots: u64,
    /// Frozen per-slot rate, bits/second.
    pub rate_bps: f64,
}

/// A completed flow with its route and slot usage.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowAssignment {
    pub flow_id: u32,
    pub mr: u32,
    pub weight: f64,
    pub qos_bps: f64,
    pub route: Route,
    pub hops: Vec<HopUse>,
}

/// Outcome of scheduling one frame.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FrameResult {
    pub frame: u64,
    pub weighted_sum: f64,
    pub transmitted_bits: u64,
    pub assignments: Vec<FlowAssignment>,
    pub slots_used: [u64; TX_COUNT],
}

/// Constraint violations reported by [`verify_schedule`]; violations are
/// data, not errors.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// A completed flow got fewer slots than its demand on some hop.
    ThroughputUnmet {
        flow_id: u32,
        tx: Transmitter,
        assigned: u64,
        required: u64,
    },
    /// A flow holds more than one route in the frame.
    MultipleRoutes { flow_id: u32 },
    /// A two-hop assignment without exactly the satellite and airship hops.
    MalformedTwoHop { flow_id: u32 },
    /// A transmitter booked past its slot budget.
    BudgetExceeded {
        tx: Transmitter,
        booked: u64,
        budget: u64,
    },
    /// An assignment for a flow id that is not part of the frame.
    UnknownFlow { flow_id: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ThroughputUnmet {
                flow_id,
                tx,
                assigned,
                required,
            } => write!(
                f,
                "flow {flow_id}: {assigned} slots on {tx} but {required} required"
            ),
            Violation::MultipleRoutes { flow_id } => {
                write!(f, "flow {flow_id}: more than one route in the frame")
            }
            Violation::MalformedTwoHop { flow_id } => {
                write!(f, "flow {flow_id}: malformed satellite-airship assignment")
            }
            Violation::BudgetExceeded { tx, booked, budget } => {
                write!(f, "{tx}: {booked} slots booked of {budget}")
            }
            Violation::UnknownFlow { flow_id } => {
                write!(f, "assignment for unknown flow {flow_id}")
            }
        }
    }
}

/// Scheduler selection, including the proposed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Multi-link weighted flow scheduling with link selection.
    Mwfs,
    /// Base stations only.
    Blo,
    /// Satellite-airship-MR route only.
    Slo,
    /// Satellite-airship-MR plus satellite-MR.
    Sasl,
    /// Relay selection over BS and airship routes, demand-ordered,
    /// weight-blind, no satellite-direct route.
    Mfs,
    /// All routes, random flow order, random feasible route per flow.
    Rc,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Mwfs,
        Algorithm::Blo,
        Algorithm::Slo,
        Algorithm::Sasl,
        Algorithm::Mfs,
        Algorithm::Rc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mwfs => "mwfs",
            Algorithm::Blo => "blo",
            Algorithm::Slo => "slo",
            Algorithm::Sasl => "sasl",
            Algorithm::Mfs => "mfs",
            Algorithm::Rc => "rc",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq)]
#[error("unknown algorithm {got:?}; valid names: mwfs, blo, slo, sasl, mfs, rc")]
pub struct UnknownAlgorithm {
    pub got: String,
}

impl std::str::FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mwfs" => Ok(Algorithm::Mwfs),
            "blo" => Ok(Algorithm::Blo),
            "slo" => Ok(Algorithm::Slo),
            "sasl" => Ok(Algorithm::Sasl),
            "mfs" => Ok(Algorithm::Mfs),
            "rc" => Ok(Algorithm::Rc),
            _ => Err(UnknownAlgorithm { got: s.to_string() }),
        }
    }
}

// ---------------------------------------------------------------------------
// Link selection
// ---------------------------------------------------------------------------

/// Candidate sets for the frame.
///
/// A flow joins the BS set when any BS is in range, the airship set when
/// the MR sits in airship coverage and the feeder link is up, and the
/// satellite set when the satellite link is up. Γ accumulates every BS
/// flow's demand on each of the three BSs. When every flow of the frame
/// is BS-servable and some single BS could carry the whole load
/// (min Γ ≤ M), the airship and satellite sets are cleared.
pub fn select_links(input: &ScheduleInput) -> LinkSets {
    let mut sets = LinkSets::default();
    let mut bs_flows = 0usize;
    for (idx, flow) in input.flows.iter().enumerate() {
        if flow.costs.in_any_bs_range() {
            bs_flows += 1;
            for j in 0..BS_COUNT {
                if flow.costs.bs_in_range[j] {
                    sets.bs[j].push(idx);
                }
                sets.gamma[j] = sets.gamma[j].saturating_add(flow.costs.bs_demand[j]);
            }
        }
        if flow.costs.relay_candidate {
            sets.airship.push(idx);
        }
        if flow.costs.satellite_candidate {
            sets.satellite.push(idx);
        }
    }

    let all_bs_served = !input.flows.is_empty() && bs_flows == input.flows.len();
    if all_bs_served && sets.gamma.iter().min().copied().unwrap_or(0) <= input.slots {
        sets.airship.clear();
        sets.satellite.clear();
    }
    sets
}

fn queue_order(input: &ScheduleInput, indices: &mut [usize], demand_of: impl Fn(usize) -> u64) {
    indices.sort_by(|&a, &b| {
        let fa = &input.flows[a];
        let fb = &input.flows[b];
        fb.weight
            .total_cmp(&fa.weight)
            .then(demand_of(a).cmp(&demand_of(b)))
            .then(fa.id.cmp(&fb.id))
    });
}

fn demand_order(input: &ScheduleInput, indices: &mut [usize], demand_of: impl Fn(usize) -> u64) {
    indices.sort_by(|&a, &b| {
        demand_of(a)
            .cmp(&demand_of(b))
            .then(input.flows[a].id.cmp(&input.flows[b].id))
    });
}

/// Admission queues from the candidate sets: weight descending, demand
/// ascending within a weight, flow id as the final tie-break. The relay
/// queue orders by the airship-budget charge of the route.
pub fn build_queues(input: &ScheduleInput, sets: &LinkSets) -> OrderedQueues {
    let mut queues = OrderedQueues {
        bs: sets.bs.clone(),
        airship: sets.airship.clone(),
        satellite: sets.satellite.clone(),
    };
    for j in 0..BS_COUNT {
        queue_order(input, &mut queues.bs[j], |i| {
            input.flows[i].costs.bs_demand[j]
        });
    }
    queue_order(input, &mut queues.airship, |i| {
        input.flows[i].costs.relay_demand.airship_charge()
    });
    queue_order(input, &mut queues.satellite, |i| {
        input.flows[i].costs.satellite_demand
    });
    queues
}

// ---------------------------------------------------------------------------
// Greedy admission
// ---------------------------------------------------------------------------

struct Admission<'a> {
    input: &'a ScheduleInput,
    remaining: [u64; TX_COUNT],
    completed: Vec<bool>,
    result: FrameResult,
}

impl<'a> Admission<'a> {
    fn new(input: &'a ScheduleInput) -> Self {
        Self {
            input,
            remaining: [input.slots; TX_COUNT],
            completed: vec![false; input.flows.len()],
            result: FrameResult {
                frame: input.frame,
                ..FrameResult::default()
            },
        }
    }

    /// Tentatively subtract, restore on failure: admit only when every
    /// charge fits its budget.
    fn try_charges(&mut self, charges: &[(Transmitter, u64)]) -> bool {
        if charges
            .iter()
            .any(|&(tx, amount)| self.remaining[tx.index()] < amount)
        {
            return false;
        }
        for &(tx, amount) in charges {
            self.remaining[tx.index()] -= amount;
            self.result.slots_used[tx.index()] += amount;
        }
        true
    }

    fn admit(&mut self, flow_idx: usize, route: Route, hops: Vec<HopUse>) {
        let flow = &self.input.flows[flow_idx];
        self.completed[flow_idx] = true;
        self.result.weighted_sum += flow.weight;
        for hop in &hops {
            let bits = hop.tx_slots as f64 * hop.rate_bps * self.input.slot_time;
            self.result.transmitted_bits += bits.floor() as u64;
        }
        self.result.assignments.push(FlowAssignment {
            flow_id: flow.id,
            mr: flow.mr,
            weight: flow.weight,
            qos_bps: flow.qos_bps,
            route,
            hops,
        });
    }

    fn try_route(&mut self, flow_idx: usize, route: Route) -> bool {
        let flow = &self.input.flows[flow_idx];
        match route {
            Route::Bs(j) => {
                let demand = flow.costs.bs_demand[j];
                if self.try_charges(&[(Transmitter::bs(j), demand)]) {
                    let rate = flow.rates.bs_bps[j];
                    self.admit(
                        flow_idx,
                        route,
                        vec![HopUse {
                            tx: Transmitter::bs(j),
                            tx_slots: demand,
                            budget_slots: demand,
                            rate_bps: rate,
                        }],
                    );
                    true
                } else {
                    false
                }
            }
            Route::SatelliteAirship => {
                let demand = flow.costs.relay_demand;
                let charges = [
                    (Transmitter::Satellite, demand.feeder),
                    (Transmitter::Airship, demand.airship_charge()),
                ];
                if self.try_charges(&charges) {
                    let (feeder_rate, delivery_rate) =
                        (flow.rates.feeder_bps, flow.rates.airship_bps);
                    self.admit(
                        flow_idx,
                        route,
                        vec![
                            HopUse {
                                tx: Transmitter::Satellite,
                                tx_slots: demand.feeder,
                                budget_slots: demand.feeder,
                                rate_bps: feeder_rate,
                            },
                            HopUse {
                                tx: Transmitter::Airship,
                                tx_slots: demand.delivery,
                                budget_slots: demand.airship_charge(),
                                rate_bps: delivery_rate,
                            },
                        ],
                    );
                    true
                } else {
                    false
                }
            }
            Route::Satellite => {
                let demand = flow.costs.satellite_demand;
                if self.try_charges(&[(Transmitter::Satellite, demand)]) {
                    let rate = flow.rates.satellite_bps;
                    self.admit(
                        flow_idx,
                        route,
                        vec![HopUse {
                            tx: Transmitter::Satellite,
                            tx_slots: demand,
                            budget_slots: demand,
                            rate_bps: rate,
                        }],
                    );
                    true
                } else {
                    false
                }
            }
        }
    }

    fn run_queue(&mut self, queue: &[usize], route: Route) {
        for &flow_idx in queue {
            if self.completed[flow_idx] {
                continue;
            }
            self.try_route(flow_idx, route);
        }
    }

    fn finish(self) -> FrameResult {
        self.result
    }
}

// ---------------------------------------------------------------------------
// MWFS
// ---------------------------------------------------------------------------

/// Switch-frame scheduling: greedy admission per BS queue, then the relay
/// queue minus BS-completed flows, then the satellite queue minus all
/// completed flows. Returns the frame result and the held routes for the
/// hold frames of the same switch period.
pub fn mwfs_switch_frame(
    input: &ScheduleInput,
    queues: &OrderedQueues,
) -> (FrameResult, HeldRoutes) {
    let mut adm = Admission::new(input);
    for j in 0..BS_COUNT {
        adm.run_queue(&queues.bs[j], Route::Bs(j));
    }
    adm.run_queue(&queues.airship, Route::SatelliteAirship);
    adm.run_queue(&queues.satellite, Route::Satellite);

    let result = adm.finish();
    let mut held = HeldRoutes::default();
    for a in &result.assignments {
        held.by_mr.insert(a.mr, a.route);
    }
    (result, held)
}

/// Hold-frame scheduling: routes stay as held at the last switch frame,
/// demands are recomputed from the current channel state, budgets reset
/// to M, and each held group is re-sorted and re-admitted greedily.
pub fn mwfs_hold_frame(
    input: &ScheduleInput,
    held: Option<&HeldRoutes>,
) -> Result<FrameResult, SchedulerError> {
    let held = held.ok_or(SchedulerError::MissingHeldState)?;

    let mut groups: BTreeMap<Route, Vec<usize>> = BTreeMap::new();
    for (idx, flow) in input.flows.iter().enumerate() {
        if let Some(&route) = held.by_mr.get(&flow.mr) {
            groups.entry(route).or_default().push(idx);
        }
    }

    let mut adm = Admission::new(input);
    for j in 0..BS_COUNT {
        if let Some(mut queue) = groups.remove(&Route::Bs(j)) {
            queue_order(input, &mut queue, |i| input.flows[i].costs.bs_demand[j]);
            adm.run_queue(&queue, Route::Bs(j));
        }
    }
    if let Some(mut queue) = groups.remove(&Route::SatelliteAirship) {
        queue_order(input, &mut queue, |i| {
            input.flows[i].costs.relay_demand.airship_charge()
        });
        adm.run_queue(&queue, Route::SatelliteAirship);
    }
    if let Some(mut queue) = groups.remove(&Route::Satellite) {
        queue_order(input, &mut queue, |i| input.flows[i].costs.satellite_demand);
        adm.run_queue(&queue, Route::Satellite);
    }
    Ok(adm.finish())
}

// ---------------------------------------------------------------------------
// Reference schedulers
// ---------------------------------------------------------------------------

/// One of the five reference schedulers. They re-decide every frame and
/// skip the link-selection clearing step; route restrictions and ordering
/// rules are what distinguish them.
pub fn baseline<G: Rng + ?Sized>(
    kind: Algorithm,
    input: &ScheduleInput,
    rng: &mut G,
) -> Result<FrameResult, SchedulerError> {
    match kind {
        Algorithm::Mwfs => Err(SchedulerError::NotABaseline(kind)),
        Algorithm::Blo => Ok(run_blo(input)),
        Algorithm::Slo => Ok(run_slo(input)),
        Algorithm::Sasl => Ok(run_sasl(input)),
        Algorithm::Mfs => Ok(run_mfs(input)),
        Algorithm::Rc => Ok(run_rc(input, rng)),
    }
}

fn candidate_indices(input: &ScheduleInput, pred: impl Fn(&RouteCosts) -> bool) -> Vec<usize> {
    (0..input.flows.len())
        .filter(|&i| pred(&input.flows[i].costs))
        .collect()
}

fn run_blo(input: &ScheduleInput) -> FrameResult {
    let mut adm = Admission::new(input);
    for j in 0..BS_COUNT {
        let mut queue = candidate_indices(input, |c| c.bs_in_range[j]);
        queue_order(input, &mut queue, |i| input.flows[i].costs.bs_demand[j]);
        adm.run_queue(&queue, Route::Bs(j));
    }
    adm.finish()
}

fn run_slo(input: &ScheduleInput) -> FrameResult {
    let mut adm = Admission::new(input);
    let mut queue = candidate_indices(input, |c| c.relay_candidate);
    queue_order(input, &mut queue, |i| {
        input.flows[i].costs.relay_demand.airship_charge()
    });
    adm.run_queue(&queue, Route::SatelliteAirship);
    adm.finish()
}

fn run_sasl(input: &ScheduleInput) -> FrameResult {
    let mut adm = Admission::new(input);
    let mut relay = candidate_indices(input, |c| c.relay_candidate);
    queue_order(input, &mut relay, |i| {
        input.flows[i].costs.relay_demand.airship_charge()
    });
    adm.run_queue(&relay, Route::SatelliteAirship);

    let mut direct = candidate_indices(input, |c| c.satellite_candidate);
    queue_order(input, &mut direct, |i| input.flows[i].costs.satellite_demand);
    adm.run_queue(&direct, Route::Satellite);
    adm.finish()
}

fn run_mfs(input: &ScheduleInput) -> FrameResult {
    // QoS-aware but weight-blind: ascending demand only.
    let mut adm = Admission::new(input);
    for j in 0..BS_COUNT {
        let mut queue = candidate_indices(input, |c| c.bs_in_range[j]);
        demand_order(input, &mut queue, |i| input.flows[i].costs.bs_demand[j]);
        adm.run_queue(&queue, Route::Bs(j));
    }
    let mut relay = candidate_indices(input, |c| c.relay_candidate);
    demand_order(input, &mut relay, |i| {
        input.flows[i].costs.relay_demand.airship_charge()
    });
    adm.run_queue(&relay, Route::SatelliteAirship);
    adm.finish()
}

fn run_rc<G: Rng + ?Sized>(input: &ScheduleInput, rng: &mut G) -> FrameResult {
    let mut order: Vec<usize> = (0..input.flows.len()).collect();
    order.shuffle(rng);

    let mut adm = Admission::new(input);
    for flow_idx in order {
        let costs = &input.flows[flow_idx].costs;
        let mut routes = Vec::with_capacity(TX_COUNT);
        for j in 0..BS_COUNT {
            if costs.bs_in_range[j] {
                routes.push(Route::Bs(j));
            }
        }
        if costs.relay_candidate {
            routes.push(Route::SatelliteAirship);
        }
        if costs.satellite_candidate {
            routes.push(Route::Satellite);
        }
        if let Some(&route) = routes.as_slice().choose(rng) {
            adm.try_route(flow_idx, route);
        }
    }
    adm.finish()
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Checks a frame result against the scheduling constraints: per-hop slot
/// counts meet the flow's demand (the throughput conditions under frozen
/// per-frame rates), one route per flow, well-formed two-hop assignments,
/// and no transmitter booked past its budget.
pub fn verify_schedule(input: &ScheduleInput, result: &FrameResult) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut booked = [0u64; TX_COUNT];
    let mut seen: BTreeMap<u32, u32> = BTreeMap::new();

    for a in &result.assignments {
        *seen.entry(a.flow_id).or_insert(0) += 1;

        let Some(flow) = input.flows.iter().find(|f| f.id == a.flow_id) else {
            violations.push(Violation::UnknownFlow { flow_id: a.flow_id });
            continue;
        };

        for hop in &a.hops {
            booked[hop.tx.index()] = booked[hop.tx.index()].saturating_add(hop.budget_slots);
        }

        match a.route {
            Route::Bs(j) => {
                let ok_shape = a.hops.len() == 1 && a.hops[0].tx == Transmitter::bs(j);
                if !ok_shape {
                    violations.push(Violation::MalformedTwoHop { flow_id: a.flow_id });
                    continue;
                }
                let required = flow.costs.bs_demand[j];
                if a.hops[0].tx_slots < required {
                    violations.push(Violation::ThroughputUnmet {
                        flow_id: a.flow_id,
                        tx: a.hops[0].tx,
                        assigned: a.hops[0].tx_slots,
                        required,
                    });
                }
            }
            Route::Satellite => {
                let ok_shape = a.hops.len() == 1 && a.hops[0].tx == Transmitter::Satellite;
                if !ok_shape {
                    violations.push(Violation::MalformedTwoHop { flow_id: a.flow_id });
                    continue;
                }
                let required = flow.costs.satellite_demand;
                if a.hops[0].tx_slots < required {
                    violations.push(Violation::ThroughputUnmet {
                        flow_id: a.flow_id,
                        tx: Transmitter::Satellite,
                        assigned: a.hops[0].tx_slots,
                        required,
                    });
                }
            }
            Route::SatelliteAirship => {
                let ok_shape = a.hops.len() == 2
                    && a.hops[0].tx == Transmitter::Satellite
                    && a.hops[1].tx == Transmitter::Airship;
                if !ok_shape {
                    violations.push(Violation::MalformedTwoHop { flow_id: a.flow_id });
                    continue;
                }
                let demand = flow.costs.relay_demand;
                for (hop, required) in a.hops.iter().zip([demand.feeder, demand.delivery]) {
                    if hop.tx_slots < required {
                        violations.push(Violation::ThroughputUnmet {
                            flow_id: a.flow_id,
                            tx: hop.tx,
                            assigned: hop.tx_slots,
                            required,
                        });
                    }
                }
            }
        }
    }

    for (flow_id, count) in seen {
        if count > 1 {
            violations.push(Violation::MultipleRoutes { flow_id });
        }
    }
    for tx in Transmitter::ALL {
        if booked[tx.index()] > input.slots {
            violations.push(Violation::BudgetExceeded {
                tx,
                booked: booked[tx.index()],
                budget: input.slots,
            });
        }
    }
    violations
}

/// Remaining-budget view of a result, for conservation checks.
pub fn remaining_slots(input: &ScheduleInput, result: &FrameResult) -> [u64; TX_COUNT] {
    let mut remaining = [input.slots; TX_COUNT];
    for (r, used) in remaining.iter_mut().zip(result.slots_used) {
        *r = r.saturating_sub(used);
    }
    remaining
}
