"""
Command driver: reads the input, runs one command, renders the result
"""

import sys
from typing import List, Tuple

from .aoe import axis_of_evil
from .cemu import Point, cemu
from .config import SessionConfig
from .instances import random_point_set
from .logging_utils import LoggerMixin
from .output_handler import OutputHandler, load_saved_basis
from .point_reader import parse_points, render_points
from .potexp import minimal_basis
from .verify import gb_certificate, selfcheck


class EscalierRunner(LoggerMixin):
    """Main orchestrator for one command"""

    def __init__(self, config: SessionConfig):
        self.config = config
        self.field = config.build_field()

    def read_text(self, path: str) -> str:
        if path == "-":
            return sys.stdin.read()
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()

    def load_points(self) -> List[Point]:
        text = self.read_text(self.config.input_path)
        points = parse_points(
            text, self.field, self.config.input_format,
            path=self.config.input_path,
        )
        self.logger.info(f"Loaded {len(points)} point(s) in {len(points[0])} variable(s)")
        return points

    def run(self) -> Tuple[int, str]:
        """
        Main execution method

        Returns:
            (exit status, rendered output)
        """
        self.logger.info("=" * 60)
        self.logger.info(f"🧮 ESCALIER {self.config.command.upper()}")
        self.logger.info("=" * 60)
        self.logger.info(f"Field: {self.field.name}")

        handler = getattr(self, f"_run_{self.config.command}")
        status, output = handler()

        self.logger.info("=" * 60)
        self.logger.info("✅ DONE" if status == 0 else "❌ FAILED")
        self.logger.info("=" * 60)
        return status, output

    def _run_escalier(self) -> Tuple[int, str]:
        escalier = cemu(self.load_points(), self.field)
        fmt, trace = self.config.output_format, self.config.show_trace
        if fmt == 'json':
            return 0, OutputHandler.escalier_json(escalier, trace)
        if fmt == 'csv':
            return 0, OutputHandler.escalier_csv(escalier, trace)
        return 0, OutputHandler.escalier_text(escalier, trace)

    def _run_minbasis(self) -> Tuple[int, str]:
        escalier = cemu(self.load_points(), self.field)
        generators = minimal_basis(escalier)
        self.logger.info(f"Minimal basis has {len(generators)} generator(s)")
        fmt = self.config.output_format
        if fmt == 'json':
            return 0, OutputHandler.minbasis_json(generators, escalier.terms, escalier.n)
        if fmt == 'csv':
            return 0, OutputHandler.minbasis_csv(generators)
        return 0, OutputHandler.minbasis_text(generators, escalier.terms, escalier.n)

    def _run_aoe(self) -> Tuple[int, str]:
        points = self.load_points()
        basis = axis_of_evil(
            points,
            field=self.field,
            validate=self.config.validate_inputs,
            parallel=self.config.parallel,
            max_workers=self.config.max_workers,
            show_progress=self.config.show_progress,
        )
        certificate = None
        status = 0
        if self.config.emit_certificate:
            certificate = gb_certificate(basis, points, spolys=True)
            status = 0 if certificate.valid else 1
        options = dict(
            factored=self.config.emit_factored,
            expanded=self.config.emit_expanded,
            reduced=self.config.emit_reduced,
            certificate=certificate,
        )
        if self.config.output_format == 'json':
            return status, OutputHandler.basis_json(basis, **options)
        return status, OutputHandler.basis_text(basis, **options)

    def _run_verify(self) -> Tuple[int, str]:
        points = self.load_points()
        if self.config.basis_path:
            _, _, polys = load_saved_basis(self.read_text(self.config.basis_path), self.field)
            self.logger.info(f"Certifying {len(polys)} saved element(s)")
            certificate = gb_certificate(polys, points, spolys=True)
        else:
            basis = axis_of_evil(
                points,
                field=self.field,
                parallel=self.config.parallel,
                max_workers=self.config.max_workers,
                show_progress=self.config.show_progress,
            )
            certificate = gb_certificate(basis, points, spolys=True)

        if not certificate.valid:
            for problem in certificate.problems():
                self.logger.error(problem)
        status = 0 if certificate.valid else 1
        if self.config.output_format == 'json':
            return status, OutputHandler.certificate_json(certificate)
        return status, OutputHandler.certificate_text(certificate)

    def _run_gen(self) -> Tuple[int, str]:
        points = random_point_set(
            self.config.gen_n, self.config.gen_points,
            self.config.gen_coord_range, self.config.gen_seed,
        )
        self.logger.info(f"Generated {len(points)} point(s)")
        fmt = 'json' if self.config.output_format == 'json' else 'csv'
        return 0, render_points(points, fmt)

    def _run_selfcheck(self) -> Tuple[int, str]:
        report = selfcheck(
            self.config.selfcheck_instances,
            seed=self.config.gen_seed,
            show_progress=self.config.show_progress,
        )
        if not report.passed:
            self.logger.error(f"Self-check found {len(report.failures)} failure(s)")
        status = 0 if report.passed else 1
        if self.config.output_format == 'json':
            return status, OutputHandler.selfcheck_json(report)
        return status, OutputHandler.selfcheck_text(report)


def run(config: SessionConfig) -> Tuple[int, str]:
    """Validate ``config`` and run its command"""
    config.validate()
    return EscalierRunner(config).run()
