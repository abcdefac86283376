"""Certificate parsing, replay, validation, and the Lemma-style transports."""

import pytest

from vknots import (
    CertificateError,
    CobordismCertificate,
    apply_move,
    canonical_key,
    closure,
    parse_certificate,
    parse_gauss,
    parse_move,
    render_certificate,
    replay,
    transport_closure_to_long,
    transport_long_to_closure,
    validate_certificate,
)
from vknots.certificates import advance_classes, initial_classes

from .conftest import KISHINO, TREFOIL, random_walk

R_KINDS = {"r1_insert", "r2_insert", "r1_delete", "r2_delete", "r3"}

KISHINO_CONCORDANCE = f"""\
start: {KISHINO}
saddle c1=0 p=3 c2=0 q=7
r2- a=3 b=4
r2- a=1 b=2
death c=1
end: ()
"""


class TestText:
    def test_parse_render_round_trip(self):
        cert = parse_certificate(KISHINO_CONCORDANCE)
        assert cert.counters() == (1, 0, 1)
        again = parse_certificate(render_certificate(cert))
        assert again == cert

    def test_comments_and_blanks_ignored(self):
        text = "# header\n\nstart: ()\n# nothing to do\n\nend: ()\n"
        cert = parse_certificate(text)
        assert cert.steps == ()

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "start: ()",
            "end: ()",
            "start: ()\nbogus move\nend: ()",
            "end: ()\nstart: ()",
            "start: O1+\nend: ()",
        ],
    )
    def test_rejects(self, bad):
        with pytest.raises((CertificateError, Exception)):
            cert = parse_certificate(bad)

    def test_replay_lists_every_stage(self):
        cert = parse_certificate(KISHINO_CONCORDANCE)
        stages = replay(cert)
        assert len(stages) == len(cert.steps) + 1
        assert stages[0] == cert.start
        assert canonical_key(stages[-1]) == canonical_key(cert.end)


class TestValidate:
    def test_kishino_concordance(self):
        report = validate_certificate(
            parse_certificate(KISHINO_CONCORDANCE), "concordance"
        )
        assert report.ok
        assert (report.saddles, report.births, report.deaths) == (1, 0, 1)
        assert report.record() == "valid=yes verdict=concordance s=1 b=0 d=1"

    def test_kishino_slice_disk(self):
        text = KISHINO_CONCORDANCE.replace("end: ()", "death c=0\nend:")
        report = validate_certificate(parse_certificate(text), "slice-disk")
        assert report.ok
        assert (report.saddles, report.births, report.deaths) == (1, 0, 2)

    def test_wrong_claim_rejected(self):
        cert = parse_certificate(KISHINO_CONCORDANCE)
        report = validate_certificate(cert, "slice-disk")
        assert not report.ok
        assert "count rule" in report.failure or "empty" in report.failure

    def test_end_mismatch_rejected(self):
        text = KISHINO_CONCORDANCE.replace("end: ()", f"end: {TREFOIL}")
        report = validate_certificate(parse_certificate(text), "concordance")
        assert not report.ok
        assert "replay ends" in report.failure

    def test_illegal_step_rejected(self):
        text = KISHINO_CONCORDANCE.replace("r2- a=3 b=4", "r1- x=9")
        report = validate_certificate(parse_certificate(text), "concordance")
        assert not report.ok
        assert "step" in report.failure

    def test_multicomponent_end_rejected(self):
        text = f"start: {KISHINO}\nsaddle c1=0 p=3 c2=0 q=7\nbirth\n" \
               "end: O1+U2-U1+O2-;O3-U4+U3-O4+;()"
        cert = parse_certificate(text)
        report = validate_certificate(cert, "concordance")
        assert not report.ok

    def test_disconnected_cobordism_rejected(self):
        # Caps the trefoil with a genus-1 piece and replaces it by a
        # disjoint disk: satisfies s = b + d but is not an annulus.
        bogus = f"""\
start: {TREFOIL}
saddle c1=0 p=0 c2=0 q=2
r1- x=1
saddle c1=0 p=0 c2=1 q=1
r1- x=2
r1- x=3
death c=0
birth
end: ()
"""
        report = validate_certificate(parse_certificate(bogus), "concordance")
        assert not report.ok
        assert "disconnect" in report.failure

    def test_slice_disk_needs_exactly_one_closure(self):
        # Count rule holds (s=2, b=1, d=2) but the birthed circle is
        # never joined to the disk piece: two caps, not one.
        text = (
            "start: ()\n"
            "saddle c1=0 p=0 c2=0 q=0\n"
            "birth\n"
            "saddle c1=0 p=0 c2=1 q=0\n"
            "death c=0\n"
            "death c=0\n"
            "end:\n"
        )
        report = validate_certificate(parse_certificate(text), "slice-disk")
        assert not report.ok
        assert "close" in report.failure


class TestClassTracking:
    def test_birth_is_new_piece(self):
        d = parse_gauss("()")
        classes = initial_classes(d)
        after, closed = advance_classes(classes, parse_move("birth"), d)
        assert after == (0, 1)
        assert not closed

    def test_split_shares_piece_and_merge_joins(self):
        d = parse_gauss(KISHINO)
        m = parse_move("saddle c1=0 p=3 c2=0 q=7")
        after, closed = advance_classes((0,), m, d)
        assert after == (0, 0)
        assert not closed

    def test_closing_death_detected(self):
        d = parse_gauss("();()")
        after, closed = advance_classes((0, 1), parse_move("death c=1"), d)
        assert after == (0,)
        assert closed

    def test_non_closing_death(self):
        d = parse_gauss("();()")
        after, closed = advance_classes((0, 0), parse_move("death c=1"), d)
        assert after == (0,)
        assert not closed


class TestTransports:
    def _long_unknot_certificate(self, rng, steps=4):
        """A validating concordance from a random long diagram to L: built
        by inverting a random insertion walk."""
        diagrams, _, inverses = random_walk(
            parse_gauss("L:"), rng, steps, {"r1_insert", "r2_insert", "r3"}
        )
        start = diagrams[-1]
        back = tuple(reversed(inverses))
        # replay the inverses in order: inverses[i] undoes moves[i]
        cur = start
        ordered = []
        for inv in reversed(inverses):
            cur = apply_move(cur, inv)
            ordered.append(inv)
        cert = CobordismCertificate(start, tuple(ordered), parse_gauss("L:"))
        assert validate_certificate(cert, "concordance").ok
        return cert

    def test_long_to_closure_preserves_counters(self, rng):
        for _ in range(10):
            cert = self._long_unknot_certificate(rng)
            closed = transport_long_to_closure(cert)
            assert closed.counters() == cert.counters()
            assert validate_certificate(closed, "concordance").ok
            assert canonical_key(closed.start) == canonical_key(closure(cert.start))

    def test_closure_to_long_shifts_counters(self, rng):
        for _ in range(10):
            cert = self._long_unknot_certificate(rng)
            k = cert.start
            round_cert = transport_long_to_closure(cert)
            lifted = transport_closure_to_long(round_cert, k)
            s, b, d = round_cert.counters()
            assert lifted.counters() == (s + 1, b, d + 1)
            assert validate_certificate(lifted, "concordance").ok
            assert lifted.start == k
            assert canonical_key(lifted.end) == canonical_key(parse_gauss("L:"))

    def test_invalid_input_refused(self):
        text = KISHINO_CONCORDANCE.replace("death c=1", "birth")
        cert = parse_certificate(text)
        with pytest.raises(CertificateError):
            transport_closure_to_long(cert, parse_gauss("L:" + KISHINO))

    def test_long_input_required(self):
        cert = parse_certificate(KISHINO_CONCORDANCE)
        with pytest.raises(CertificateError):
            transport_long_to_closure(cert)
