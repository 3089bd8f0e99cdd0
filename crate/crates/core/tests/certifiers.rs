mod common;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use common::brute_rainbow;
use rhl_core::certify::{certify_loose, certify_loose_plus, certify_tight, certify_tripartite, verify_certificate, Certificate, LooseCertificate, TriTheorem};
use rhl_core::samplers::{sample_structured, SampleCase};
use rhl_core::{Coloring, HostGraph, Pattern};

fn recolor(c: &Coloring, rng: &mut impl Rng) -> Coloring {
    let mut colors = c.colors().to_vec();
    let i = rng.random_range(0..colors.len());
    colors[i] = rng.random_range(0..c.palette_size() + 1);
    Coloring::new(c.host().clone(), colors).unwrap()
}

/// Certify a sample, then perturb it: whenever the old certificate still
/// verifies, the perturbed coloring must still avoid a rainbow copy.
fn soundness(case: SampleCase, pattern: Pattern, certify: impl Fn(&Coloring) -> Certificate) {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut kept = 0;
    for seed in 0..25 {
        let c = sample_structured(case, case.min_n(), seed).unwrap();
        let cert = certify(&c);
        verify_certificate(&c, &cert).unwrap();
        for _ in 0..8 {
            let d = recolor(&c, &mut rng);
            if verify_certificate(&d, &cert).is_ok() {
                kept += 1;
                assert!(!brute_rainbow(&d, &pattern), "{case} seed {seed}: certificate verifies a rainbow {}", pattern.name());
            }
        }
    }
    assert!(kept > 0, "{case}: no perturbation kept the certificate");
}

#[test]
fn tight_certificates_are_sound() {
    soundness(SampleCase::TightPartition, Pattern::tight(), |c| certify_tight(c).unwrap().into());
}

#[test]
fn tripartite_partition_certificates_are_sound() {
    soundness(SampleCase::MpApexPartition, Pattern::messy(), |c| certify_tripartite(c, TriTheorem::MpMessy).unwrap().into());
    soundness(SampleCase::MpApexPartition, Pattern::tight(), |c| certify_tripartite(c, TriTheorem::MpTight).unwrap().into());
    soundness(SampleCase::MpBasePartition, Pattern::tight(), |c| certify_tripartite(c, TriTheorem::MpTight).unwrap().into());
}

/// Loose certificates describe rainbow-free colorings but do not force it:
/// two differently colored edges through the apex form a rainbow path with
/// any mono edge.
#[test]
fn loose_certificates_are_necessary_not_sufficient() {
    let host = HostGraph::complete(7).unwrap();
    let colors = host
        .edges()
        .iter()
        .map(|e| match *e {
            [0, 1, 6] => 1,
            [2, 3, 6] => 2,
            _ => 0,
        })
        .collect();
    let c = Coloring::new(host, colors).unwrap();
    let cert = Certificate::Loose(LooseCertificate::MonoMinusVertex { u: 6, mono_color: c.color_of([0, 1, 2]) });
    assert!(verify_certificate(&c, &cert).is_ok());
    assert!(brute_rainbow(&c, &Pattern::loose()));
    assert!(certify_loose(&c).is_err());
}

fn two_vertices_leave_one_color(c: &Coloring) -> bool {
    let n = c.host().vertex_count();
    (0..n).any(|u| {
        (u + 1..n).any(|v| {
            let mut rest = c.host().edges().iter().zip(c.colors()).filter(|(e, _)| !e.contains(&u) && !e.contains(&v));
            let first = rest.next().map(|(_, x)| *x);
            rest.all(|(_, x)| Some(*x) == first)
        })
    })
}

#[test]
fn certified_loose_instances_lose_their_colors_with_two_vertices() {
    for case in SampleCase::ALL.into_iter().filter(|c| !c.is_tripartite() && *c != SampleCase::TightPartition) {
        for seed in 0..40 {
            let c = sample_structured(case, case.min_n() + (seed % 3) as u32, seed).unwrap();
            certify_loose_plus(&c).unwrap();
            assert!(two_vertices_leave_one_color(&c), "{case} seed {seed}");
        }
    }
}
