//! Code equivalence through colored graphs and canonical labeling.
//!
//! A code of length `n` with `m` words becomes a graph on `m + 2n` vertices:
//! one per codeword (color 0) and a pair `0_i`, `1_i` per coordinate
//! (color 1). Codeword `u` is joined to `0_i` or `1_i` according to `u_i`,
//! and each pair is joined by an edge, so coordinate permutations and bit
//! flips are exactly the color-preserving isomorphisms.
//!
//! The labeling engine refines to an equitable partition, then searches
//! individualizations of the first largest non-singleton cell. Leaves are
//! ranked by their refinement traces and then by the relabeled adjacency;
//! the largest leaf gives the canonical form. Automorphisms found at equal
//! leaves prune the search by orbits of the prefix stabilizer.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::f2core::{Code, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<u32>>,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(colors: Vec<u32>) -> ColoredGraph {
        ColoredGraph {
            adjacency: vec![Vec::new(); colors.len()],
            colors,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::OutOfRange(format!(
                "edge ({u}, {v}) in a graph on {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::OutOfRange(format!("self-loop at {u}")));
        }
        if let Err(p) = self.adjacency[u].binary_search(&(v as u32)) {
            self.adjacency[u].insert(p, v as u32);
            let q = self.adjacency[v].binary_search(&(u as u32)).unwrap_err();
            self.adjacency[v].insert(q, u as u32);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// The image graph in which vertex `v` is renamed `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<ColoredGraph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| (p as usize) >= n || std::mem::replace(&mut seen[p as usize], true))
        {
            return Err(Error::OutOfRange("relabeling is not a permutation".into()));
        }
        let mut colors = vec![0; n];
        let mut adjacency = vec![Vec::new(); n];
        for v in 0..n {
            let pv = perm[v] as usize;
            colors[pv] = self.colors[v];
            let mut row: Vec<u32> = self.adjacency[v]
                .iter()
                .map(|&u| perm[u as usize])
                .collect();
            row.sort_unstable();
            adjacency[pv] = row;
        }
        Ok(ColoredGraph { adjacency, colors })
    }

    /// Whether `perm` maps the graph onto itself, preserving colors.
    pub fn is_automorphism(&self, perm: &[u32]) -> bool {
        self.relabel(perm).map(|g| &g == self).unwrap_or(false)
    }
}

/// The incidence graph of a code: codeword `k` is vertex `k`, and
/// coordinate `i` contributes vertices `m + 2i` (`0_i`) and `m + 2i + 1` (`1_i`).
pub fn code_to_graph(c: &Code) -> Result<ColoredGraph> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let (m, n) = (c.size(), c.len());
    let mut colors = vec![0; m];
    colors.resize(m + 2 * n, 1);
    let mut adjacency = vec![Vec::with_capacity(n); m + 2 * n];
    for (k, w) in c.iter().enumerate() {
        for i in 0..n {
            let p = m + 2 * i + usize::from(w.bit(i));
            adjacency[k].push(p as u32);
            adjacency[p].push(k as u32);
        }
    }
    for i in 0..n {
        let (z, o) = (m + 2 * i, m + 2 * i + 1);
        adjacency[z].push(o as u32);
        adjacency[o].push(z as u32);
    }
    for row in &mut adjacency {
        row.sort_unstable();
    }
    Ok(ColoredGraph { adjacency, colors })
}

/// Canonical serialization of a colored graph. Equal labels exactly when
/// the graphs are color-preserving isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel {
    pub bytes: Vec<u8>,
}

impl CanonicalLabel {
    /// Hex SHA-256 of the label bytes.
    pub fn digest(&self) -> String {
        Sha256::digest(&self.bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({})", &self.digest()[..16])
    }
}

/// Full output of the labeling search.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub label: CanonicalLabel,
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    pub labeling: Vec<u32>,
    /// Automorphisms discovered during the search, as vertex maps.
    pub generators: Vec<Vec<u32>>,
    pub leaves: usize,
}

struct Hasher(u64);

impl Hasher {
    fn mix(&mut self, x: u64) {
        let mut z = self.0 ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        self.0 = z ^ (z >> 31);
    }
}

#[derive(Clone)]
struct Partition {
    lab: Vec<u32>,
    cell_of: Vec<u32>,
    len: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn from_colors(colors: &[u32]) -> (Partition, Vec<u32>) {
        let n = colors.len();
        let mut lab: Vec<u32> = (0..n as u32).collect();
        lab.sort_by_key(|&v| (colors[v as usize], v));
        let mut cell_of = vec![0; n];
        let mut len = vec![0; n];
        let mut starts = Vec::new();
        let mut s = 0;
        while s < n {
            let c = colors[lab[s] as usize];
            let mut e = s;
            while e < n && colors[lab[e] as usize] == c {
                cell_of[lab[e] as usize] = s as u32;
                e += 1;
            }
            len[s] = (e - s) as u32;
            starts.push(s as u32);
            s = e;
        }
        let cells = starts.len();
        (
            Partition {
                lab,
                cell_of,
                len,
                cells,
            },
            starts,
        )
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First largest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        let mut s = 0;
        while s < self.lab.len() {
            let l = self.len[s];
            if l > 1 && best.is_none_or(|(bl, _)| l > bl) {
                best = Some((l, s));
            }
            s += l as usize;
        }
        best.map(|(_, s)| s)
    }

    fn individualize(&mut self, v: u32) -> u32 {
        let s = self.cell_of[v as usize] as usize;
        let l = self.len[s] as usize;
        let p = s + self.lab[s..s + l]
            .iter()
            .position(|&x| x == v)
            .expect("vertex in its cell");
        self.lab.swap(s, p);
        self.len[s] = 1;
        self.len[s + 1] = (l - 1) as u32;
        for &x in &self.lab[s + 1..s + l] {
            self.cell_of[x as usize] = (s + 1) as u32;
        }
        self.cells += 1;
        s as u32
    }
}

struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Csr {
    fn new(g: &ColoredGraph) -> Csr {
        let mut offsets = vec![0];
        let mut targets = Vec::new();
        for row in &g.adjacency {
            targets.extend_from_slice(row);
            offsets.push(targets.len());
        }
        Csr { offsets, targets }
    }

    fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }
}

struct Refiner {
    count: Vec<u32>,
    touched: Vec<u32>,
    marked: Vec<bool>,
    queued: Vec<bool>,
}

impl Refiner {
    fn new(n: usize) -> Refiner {
        Refiner {
            count: vec![0; n],
            touched: Vec::new(),
            marked: vec![false; n],
            queued: vec![false; n],
        }
    }

    /// Refines `p` to the coarsest equitable refinement, returning a trace hash.
    fn refine(&mut self, g: &Csr, p: &mut Partition, initial: &[u32]) -> u64 {
        let mut h = Hasher(p.cells as u64);
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &c in initial {
            if !self.queued[c as usize] {
                self.queued[c as usize] = true;
                queue.push_back(c);
            }
        }
        let mut cells_hit: Vec<u32> = Vec::new();
        while let Some(w) = queue.pop_front() {
            self.queued[w as usize] = false;
            if p.is_discrete() {
                continue;
            }
            let (ws, wl) = (w as usize, p.len[w as usize] as usize);
            h.mix(((w as u64) << 32) | wl as u64);
            for k in ws..ws + wl {
                for &u in g.neighbors(p.lab[k]) {
                    if self.count[u as usize] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u as usize] += 1;
                }
            }
            for &u in &self.touched {
                let c = p.cell_of[u as usize];
                if p.len[c as usize] > 1 && !self.marked[c as usize] {
                    self.marked[c as usize] = true;
                    cells_hit.push(c);
                }
            }
            cells_hit.sort_unstable();
            for &c in &cells_hit {
                self.marked[c as usize] = false;
                let (cs, cl) = (c as usize, p.len[c as usize] as usize);
                let count = &self.count;
                p.lab[cs..cs + cl].sort_unstable_by_key(|&v| count[v as usize]);
                let lo = count[p.lab[cs] as usize];
                let hi = count[p.lab[cs + cl - 1] as usize];
                if lo == hi {
                    h.mix(((c as u64) << 32) | lo as u64);
                    continue;
                }
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut fs = cs;
                for k in cs + 1..=cs + cl {
                    if k == cs + cl || count[p.lab[k] as usize] != count[p.lab[fs] as usize] {
                        frags.push((fs, k - fs));
                        h.mix(
                            ((fs as u64) << 40)
                                ^ ((count[p.lab[fs] as usize] as u64) << 20)
                                ^ (k - fs) as u64,
                        );
                        fs = k;
                    }
                }
                for &(fs, fl) in &frags {
                    p.len[fs] = fl as u32;
                    for k in fs..fs + fl {
                        p.cell_of[p.lab[k] as usize] = fs as u32;
                    }
                }
                p.cells += frags.len() - 1;
                if self.queued[cs] {
                    for &(fs, _) in &frags[1..] {
                        self.queued[fs] = true;
                        queue.push_back(fs as u32);
                    }
                } else {
                    let big = frags
                        .iter()
                        .enumerate()
                        .max_by(|a, b| a.1 .1.cmp(&b.1 .1).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .expect("nonempty");
                    for (i, &(fs, _)) in frags.iter().enumerate() {
                        if i != big {
                            self.queued[fs] = true;
                            queue.push_back(fs as u32);
                        }
                    }
                }
            }
            cells_hit.clear();
            for &u in &self.touched {
                self.count[u as usize] = 0;
            }
            self.touched.clear();
        }
        h.mix(p.cells as u64);
        h.0
    }
}

struct Leaf {
    path: Vec<u32>,
    invariants: Vec<u64>,
    lab: Vec<u32>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a Csr,
    n: usize,
    refiner: Refiner,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u32>>,
    leaves: usize,
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

impl<'a> Search<'a> {
    fn certificate(&self, lab: &[u32]) -> Vec<u64> {
        let n = self.n;
        let words = n.div_ceil(64);
        let mut pos = vec![0u32; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let mut cert = vec![0u64; n * words];
        for (i, &v) in lab.iter().enumerate() {
            let row = &mut cert[i * words..(i + 1) * words];
            for &u in self.g.neighbors(v) {
                let j = pos[u as usize] as usize;
                row[j / 64] |= 1u64 << (63 - j % 64);
            }
        }
        cert
    }

    fn orbits(&self, prefix: &[u32]) -> Vec<u32> {
        let mut parent: Vec<u32> = (0..self.n as u32).collect();
        for g in &self.generators {
            if prefix.iter().all(|&v| g[v as usize] == v) {
                for (v, &w) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v as u32), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
            }
        }
        parent
    }

    fn leaf(&mut self, part: &Partition, path: &[u32], invariants: &[u64]) -> Option<usize> {
        self.leaves += 1;
        let cert = self.certificate(&part.lab);
        let leaf = Leaf {
            path: path.to_vec(),
            invariants: invariants.to_vec(),
            lab: part.lab.clone(),
            cert,
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                path: leaf.path.clone(),
                invariants: leaf.invariants.clone(),
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        for reference in [first, self.best.as_ref().expect("best set with first")] {
            if reference.invariants == leaf.invariants && reference.cert == leaf.cert {
                let mut gamma = vec![0u32; self.n];
                for (a, b) in reference.lab.iter().zip(&leaf.lab) {
                    gamma[*a as usize] = *b;
                }
                let level = common_prefix(&reference.path, &leaf.path);
                self.generators.push(gamma);
                return Some(level);
            }
        }
        let best = self.best.as_ref().expect("best set with first");
        let key = (&leaf.invariants, &leaf.cert);
        if key.cmp(&(&best.invariants, &best.cert)) == Ordering::Greater {
            self.best = Some(leaf);
        }
        None
    }

    /// Explores the node reached by `path`. `ahead` is true when the node's
    /// invariants already exceed the best leaf's on a common prefix.
    fn node(
        &mut self,
        part: Partition,
        path: &mut Vec<u32>,
        invariants: &mut Vec<u64>,
        ahead: bool,
    ) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(&part, path, invariants);
        }
        let depth = path.len();
        let t = part.target_cell().expect("non-discrete partition");
        let mut cell: Vec<u32> = part.lab[t..t + part.len[t] as usize].to_vec();
        cell.sort_unstable();
        let mut explored: Vec<u32> = Vec::new();
        let mut known_gens = usize::MAX;
        let mut orbits: Vec<u32> = Vec::new();
        for v in cell {
            if known_gens != self.generators.len() {
                orbits = self.orbits(path);
                known_gens = self.generators.len();
            }
            let root = find(&mut orbits, v);
            if explored.iter().any(|&u| find(&mut orbits, u) == root) {
                continue;
            }
            explored.push(v);
            let mut child = part.clone();
            let s = child.individualize(v);
            let h = self.refiner.refine(self.g, &mut child, &[s]);
            let mut child_ahead = ahead;
            if !ahead {
                if let Some(best) = &self.best {
                    match best
                        .invariants
                        .get(depth)
                        .map_or(Ordering::Greater, |b| h.cmp(b))
                    {
                        Ordering::Less => continue,
                        Ordering::Greater => child_ahead = true,
                        Ordering::Equal => {}
                    }
                }
            }
            path.push(v);
            invariants.push(h);
            let jump = self.node(child, path, invariants, child_ahead);
            path.pop();
            invariants.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Runs the full labeling search.
pub fn canonical_search(g: &ColoredGraph) -> Canonical {
    let n = g.vertex_count();
    let csr = Csr::new(g);
    let (mut part, starts) = Partition::from_colors(&g.colors);
    let mut refiner = Refiner::new(n);
    refiner.refine(&csr, &mut part, &starts);
    let mut search = Search {
        g: &csr,
        n,
        refiner,
        first: None,
        best: None,
        generators: Vec::new(),
        leaves: 0,
    };
    search.node(part, &mut Vec::new(), &mut Vec::new(), false);
    let best = search.best.expect("at least one leaf");
    let mut bytes = Vec::with_capacity(8 + 4 * n + 8 * best.cert.len());
    bytes.extend_from_slice(&(n as u64).to_le_bytes());
    for &v in &best.lab {
        bytes.extend_from_slice(&g.colors[v as usize].to_le_bytes());
    }
    for w in &best.cert {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    Canonical {
        label: CanonicalLabel { bytes },
        labeling: best.lab,
        generators: search.generators,
        leaves: search.leaves,
    }
}

pub fn canonical_form(g: &ColoredGraph) -> CanonicalLabel {
    canonical_search(g).label
}

pub fn code_label(c: &Code) -> Result<CanonicalLabel> {
    Ok(canonical_form(&code_to_graph(c)?))
}

/// Equivalence under coordinate permutations and per-coordinate bit flips.
pub fn are_equivalent(c1: &Code, c2: &Code) -> Result<bool> {
    if c1.len() != c2.len() || c1.size() != c2.size() {
        return Ok(false);
    }
    if c1.is_empty() {
        return Ok(true);
    }
    if pre_invariant(c1) != pre_invariant(c2) {
        return Ok(false);
    }
    Ok(code_label(c1)? == code_label(c2)?)
}

/// An element of the equivalence group: coordinate `i` moves to `perm[i]`,
/// then `flip` is added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub perm: Vec<usize>,
    pub flip: Word,
}

impl Equivalence {
    pub fn apply(&self, w: &Word) -> Word {
        let bits = (0..w.len()).filter(|&i| w.bit(i)).map(|i| self.perm[i]);
        let moved =
            Word::from_positions(w.len(), &bits.collect::<Vec<_>>()).expect("permuted positions");
        moved + self.flip
    }

    pub fn apply_code(&self, c: &Code) -> Result<Code> {
        Code::new(c.len(), c.iter().map(|w| self.apply(w)))
    }

    /// Reads the coordinate action of a vertex map of a code graph whose
    /// first `m` vertices are codewords.
    fn from_graph_map(gamma: &[u32], m: usize, n: usize) -> Result<Equivalence> {
        let mut perm = vec![0; n];
        let mut flipped = Vec::new();
        for (i, slot) in perm.iter_mut().enumerate() {
            let image = gamma[m + 2 * i] as usize;
            if image < m {
                return Err(Error::Verification(
                    "automorphism moves a position onto a codeword".into(),
                ));
            }
            *slot = (image - m) / 2;
            if (image - m) % 2 == 1 {
                flipped.push(*slot);
            }
        }
        Ok(Equivalence {
            perm,
            flip: Word::from_positions(n, &flipped)?,
        })
    }
}

/// Generators of the equivalence-group stabilizer of `c`, each checked to
/// map `c` onto itself.
pub fn code_automorphisms(c: &Code) -> Result<Vec<Equivalence>> {
    let g = code_to_graph(c)?;
    let search = canonical_search(&g);
    let mut out = Vec::new();
    for gamma in &search.generators {
        let e = Equivalence::from_graph_map(gamma, c.size(), c.len())?;
        if &e.apply_code(c)? != c {
            return Err(Error::Verification(
                "automorphism generator does not fix the code".into(),
            ));
        }
        out.push(e);
    }
    Ok(out)
}

/// Cheap equivalence invariant: length, size, and the sorted multiset of
/// per-codeword distance profiles.
pub fn pre_invariant(c: &Code) -> Vec<u32> {
    let n = c.len();
    let words: Vec<Word> = c.iter().copied().collect();
    let mut profiles: Vec<Vec<u32>> = words
        .iter()
        .map(|u| {
            let mut p = vec![0u32; n + 1];
            for v in &words {
                p[(u.packed() ^ v.packed()).count_ones() as usize] += 1;
            }
            p
        })
        .collect();
    profiles.sort_unstable();
    let mut out = vec![n as u32, words.len() as u32];
    out.extend(profiles.into_iter().flatten());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDescriptor {
    /// Lowest input index in the class.
    pub representative: usize,
    pub count: usize,
    /// Input indices in the class, ascending.
    pub members: Vec<usize>,
    /// `None` when the class was separated by the pre-invariant alone.
    pub label: Option<CanonicalLabel>,
}

/// Groups codes into equivalence classes, ordered by representative index.
///
/// Codes are bucketed by [`pre_invariant`] first; canonical labels are only
/// computed inside buckets with more than one member.
pub fn partition_classes(codes: &[Code]) -> Result<Vec<ClassDescriptor>> {
    if codes.iter().any(Code::is_empty) {
        return Err(Error::EmptyCode);
    }
    let keys: Vec<Vec<u32>> = codes.par_iter().map(pre_invariant).collect();
    let mut buckets: HashMap<&[u32], Vec<usize>> = HashMap::new();
    for (i, k) in keys.iter().enumerate() {
        buckets.entry(k.as_slice()).or_default().push(i);
    }
    let need: Vec<usize> = buckets
        .values()
        .filter(|b| b.len() > 1)
        .flatten()
        .copied()
        .collect();
    let labels: HashMap<usize, CanonicalLabel> = need
        .par_iter()
        .map(|&i| code_label(&codes[i]).map(|l| (i, l)))
        .collect::<Result<_>>()?;
    let mut classes = Vec::new();
    for members in buckets.values() {
        if members.len() == 1 {
            classes.push(ClassDescriptor {
                representative: members[0],
                count: 1,
                members: members.clone(),
                label: None,
            });
            continue;
        }
        let mut by_label: HashMap<&CanonicalLabel, Vec<usize>> = HashMap::new();
        for &i in members {
            by_label.entry(&labels[&i]).or_default().push(i);
        }
        for (label, mut members) in by_label {
            members.sort_unstable();
            classes.push(ClassDescriptor {
                representative: members[0],
                count: members.len(),
                members,
                label: Some(label.clone()),
            });
        }
    }
    classes.sort_by_key(|c| c.representative);
    Ok(classes)
}
