//! C ABI over `topolens`.
//!
//! Graphs are opaque `TlGraph` handles created by one of the constructors
//! and released with `tl_graph_free`. Every fallible call returns a
//! `TlStatus`; on failure the message is available from
//! `tl_last_error_message` on the same thread. Results go through out
//! pointers, which are left untouched on failure.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fs::File;
use std::io::BufReader;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use topolens::io::{read_graph, InputFormat};
use topolens::metrics::{self, FitMethod, PathPolicy};
use topolens::resilience::{node_removal_experiment, RemovalPlan, RemovalStrategy};
use topolens::richclub::{self, ClubSelector};
use topolens::{synth, Error, Graph};

/// Opaque graph handle.
pub struct TlGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Io = 4,
    EmptyGraph = 5,
    InvalidNode = 6,
    Degenerate = 7,
    InsufficientData = 8,
    InvalidKmin = 9,
    UndefinedMixing = 10,
    DisconnectedGraph = 11,
    EmptyClub = 12,
    NoPeripheralPairs = 13,
    BufferTooSmall = 14,
    Panic = 15,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlFormat {
    /// Pick from the file name: `*.as-rel*` is as-rel, anything else pairs.
    Auto = 0,
    Pairs = 1,
    AsRel = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlFitMethod {
    Mle = 0,
    OlsCcdf = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlStrategy {
    TargetedDegree = 0,
    Random = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TlPowerLawFit {
    pub gamma: f64,
    pub c: f64,
    pub kmin: usize,
    /// Kolmogorov-Smirnov distance of the fitted tail.
    pub ks: f64,
    pub tail_count: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TlRichClubRow {
    pub k: usize,
    pub n_geq: usize,
    pub e_geq: usize,
    /// NaN when fewer than two nodes have degree >= k.
    pub phi: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TlTransitSummary {
    pub club_size: usize,
    pub peripheral_nodes: usize,
    pub pairs: u64,
    pub mean_hops: f64,
    pub interior_in_club: f64,
    pub strict_pattern: f64,
    /// NaN when not computed (graphs above the size limit).
    pub optimistic_interior_in_club: f64,
    pub sampled: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TlRemovalPoint {
    pub removed: usize,
    pub giant_nodes: usize,
    pub giant_share: f64,
    /// NaN when the remaining giant has fewer than two nodes.
    pub mean_path: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TlStatus {
    match e {
        Error::EmptyGraph => TlStatus::EmptyGraph,
        Error::InvalidNode { .. } => TlStatus::InvalidNode,
        Error::Parse { .. } => TlStatus::Parse,
        Error::Io(_) => TlStatus::Io,
        Error::Degenerate(_) => TlStatus::Degenerate,
        Error::InsufficientData(_) => TlStatus::InsufficientData,
        Error::InvalidKmin { .. } => TlStatus::InvalidKmin,
        Error::UndefinedMixing => TlStatus::UndefinedMixing,
        Error::DisconnectedGraph => TlStatus::DisconnectedGraph,
        Error::EmptyClub => TlStatus::EmptyClub,
        Error::NoPeripheralPairs => TlStatus::NoPeripheralPairs,
        Error::InvalidSelector(_) | Error::InvalidSpec(_) | Error::InvalidPlan(_) => TlStatus::InvalidArgument,
    }
}

struct Fail(TlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(TlStatus::NullPointer, "null pointer argument".into())
}

/// Run `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TlStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TlStatus::Panic
        }
    }
}

unsafe fn graph<'a>(g: *const TlGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.inner).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn emit(out: *mut *mut TlGraph, g: Graph) -> Result<(), Fail> {
    write(out, Box::into_raw(Box::new(TlGraph { inner: g })))
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn tl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Load an edge list from `path`.
#[no_mangle]
pub unsafe extern "C" fn tl_graph_from_file(path: *const c_char, format: TlFormat, out: *mut *mut TlGraph) -> TlStatus {
    guard(|| {
        if path.is_null() {
            return Err(null());
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Fail(TlStatus::InvalidArgument, "path is not valid UTF-8".into()))?;
        let format = match format {
            TlFormat::Auto => InputFormat::from_path(Path::new(path)),
            TlFormat::Pairs => InputFormat::Pairs,
            TlFormat::AsRel => InputFormat::AsRel,
        };
        let file = File::open(path).map_err(Error::from)?;
        emit(out, read_graph(BufReader::new(file), format)?)
    })
}

/// Build a graph on nodes `0..node_count` from `pair_count` (u, v) pairs
/// stored flat in `pairs`. Self-loops and duplicates are dropped.
#[no_mangle]
pub unsafe extern "C" fn tl_graph_from_edges(
    node_count: usize,
    pairs: *const usize,
    pair_count: usize,
    out: *mut *mut TlGraph,
) -> TlStatus {
    guard(|| {
        let flat: &[usize] = if pair_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(pairs, 2 * pair_count)
        };
        let edges: Vec<_> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        emit(out, Graph::from_edges(node_count, &edges)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn tl_generate_er(n: usize, links: usize, seed: u64, out: *mut *mut TlGraph) -> TlStatus {
    guard(|| emit(out, synth::gen_er(n, links, seed)?))
}

#[no_mangle]
pub unsafe extern "C" fn tl_generate_ba(n: usize, m: usize, seed: u64, out: *mut *mut TlGraph) -> TlStatus {
    guard(|| emit(out, synth::gen_ba(n, m, seed)?))
}

#[no_mangle]
pub unsafe extern "C" fn tl_generate_plconfig(
    n: usize,
    gamma: f64,
    kmin: usize,
    seed: u64,
    out: *mut *mut TlGraph,
) -> TlStatus {
    guard(|| emit(out, synth::gen_powerlaw_config(n, gamma, kmin, seed)?))
}

/// Release a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tl_graph_free(g: *mut TlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn tl_graph_node_count(g: *const TlGraph, out: *mut usize) -> TlStatus {
    guard(|| write(out, graph(g)?.node_count()))
}

#[no_mangle]
pub unsafe extern "C" fn tl_graph_edge_count(g: *const TlGraph, out: *mut usize) -> TlStatus {
    guard(|| write(out, graph(g)?.edge_count()))
}

#[no_mangle]
pub unsafe extern "C" fn tl_graph_degree(g: *const TlGraph, node: usize, out: *mut usize) -> TlStatus {
    guard(|| write(out, graph(g)?.degree(node)?))
}

#[no_mangle]
pub unsafe extern "C" fn tl_average_degree(g: *const TlGraph, out: *mut f64) -> TlStatus {
    guard(|| write(out, metrics::average_degree(graph(g)?)))
}

#[no_mangle]
pub unsafe extern "C" fn tl_density(g: *const TlGraph, out: *mut f64) -> TlStatus {
    guard(|| write(out, metrics::density(graph(g)?)?))
}

#[no_mangle]
pub unsafe extern "C" fn tl_assortativity(g: *const TlGraph, out: *mut f64) -> TlStatus {
    guard(|| write(out, metrics::assortativity(graph(g)?)?))
}

#[no_mangle]
pub unsafe extern "C" fn tl_fit_power_law(
    g: *const TlGraph,
    kmin: usize,
    method: TlFitMethod,
    out: *mut TlPowerLawFit,
) -> TlStatus {
    guard(|| {
        let method = match method {
            TlFitMethod::Mle => FitMethod::Mle,
            TlFitMethod::OlsCcdf => FitMethod::OlsCcdf,
        };
        let fit = metrics::fit_power_law(&metrics::degree_distribution(graph(g)?), kmin, method)?;
        write(
            out,
            TlPowerLawFit {
                gamma: fit.gamma,
                c: fit.c,
                kmin: fit.kmin,
                ks: fit.goodness,
                tail_count: fit.tail_count,
            },
        )
    })
}

fn policy(samples: usize, seed: u64) -> PathPolicy {
    if samples == 0 {
        PathPolicy::Exact
    } else {
        PathPolicy::Sample { count: samples, seed }
    }
}

/// Mean shortest path of a connected graph. `samples == 0` means every
/// node is a source.
#[no_mangle]
pub unsafe extern "C" fn tl_mean_shortest_path(
    g: *const TlGraph,
    samples: usize,
    seed: u64,
    out: *mut f64,
) -> TlStatus {
    guard(|| {
        write(
            out,
            metrics::shortest_path_stats(graph(g)?, policy(samples, seed))?.mean,
        )
    })
}

/// Copy the rich-club curve into `rows`. `*len` receives the number of
/// rows; if it exceeds `capacity` nothing is copied and
/// `BufferTooSmall` is returned. Pass `capacity == 0` to query the size.
#[no_mangle]
pub unsafe extern "C" fn tl_rich_club(
    g: *const TlGraph,
    rows: *mut TlRichClubRow,
    capacity: usize,
    len: *mut usize,
) -> TlStatus {
    guard(|| {
        let curve = richclub::rich_club_curve(graph(g)?);
        write(len, curve.rows.len())?;
        if curve.rows.len() > capacity {
            return Err(Fail(
                TlStatus::BufferTooSmall,
                format!("{} rows needed, capacity {capacity}", curve.rows.len()),
            ));
        }
        if curve.rows.is_empty() {
            return Ok(());
        }
        if rows.is_null() {
            return Err(null());
        }
        let dst = std::slice::from_raw_parts_mut(rows, curve.rows.len());
        for (d, r) in dst.iter_mut().zip(&curve.rows) {
            *d = TlRichClubRow {
                k: r.k,
                n_geq: r.n_geq,
                e_geq: r.e_geq,
                phi: r.phi.unwrap_or(f64::NAN),
            };
        }
        Ok(())
    })
}

/// Transit decomposition for the `club_top` highest-degree nodes.
#[no_mangle]
pub unsafe extern "C" fn tl_transit(
    g: *const TlGraph,
    club_top: usize,
    samples: usize,
    seed: u64,
    out: *mut TlTransitSummary,
) -> TlStatus {
    guard(|| {
        let g = graph(g)?;
        let members = richclub::club_members(g, ClubSelector::TopRank(club_top))?;
        let r = richclub::transit_decomposition(g, &members, policy(samples, seed))?;
        write(
            out,
            TlTransitSummary {
                club_size: r.club_size,
                peripheral_nodes: r.peripheral_nodes,
                pairs: r.pairs,
                mean_hops: r.mean_hops,
                interior_in_club: r.interior_in_club,
                strict_pattern: r.strict_pattern,
                optimistic_interior_in_club: r.optimistic_interior_in_club.unwrap_or(f64::NAN),
                sampled: r.sampled,
            },
        )
    })
}

/// Remove a `fraction` of nodes and report the remaining giant component.
/// `samples` BFS sources estimate its mean path.
#[no_mangle]
pub unsafe extern "C" fn tl_remove_nodes(
    g: *const TlGraph,
    strategy: TlStrategy,
    fraction: f64,
    seed: u64,
    samples: usize,
    out: *mut TlRemovalPoint,
) -> TlStatus {
    guard(|| {
        let strategy = match strategy {
            TlStrategy::TargetedDegree => RemovalStrategy::TargetedDegree,
            TlStrategy::Random => RemovalStrategy::Random,
        };
        let plan = RemovalPlan::new(strategy, vec![fraction], seed)?.with_sample_sources(samples.max(1));
        let p = node_removal_experiment(graph(g)?, &plan)?.remove(0);
        write(
            out,
            TlRemovalPoint {
                removed: p.removed,
                giant_nodes: p.giant_nodes,
                giant_share: p.giant_share,
                mean_path: p.mean_path.unwrap_or(f64::NAN),
            },
        )
    })
}
