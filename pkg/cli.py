"""
Interface de linha de comando: defasagens, varredura de β, estados ligados,
validação contra o oráculo e tabela comparativa dos presets
"""

import argparse
import sys
from typing import List, Optional, Sequence

from config.settings import Settings
from models.base_models import RunRequest, parse_l_spec
from models.error_models import (
    ScatteringError,
    UsageError,
    ValidationFailedError,
    get_exit_code_for_error,
)
from models.reference_data import MASS_PRESETS, TABLE_L_MAX
from models.response_models import BoundStateRecord, PhaseShiftRecord, TableRow
from services.logging_service import LoggingService
from services.output_service import render_csv, render_json
from services.sweep_service import SweepService


class _Parser(argparse.ArgumentParser):
    """ArgumentParser que sinaliza erro de uso por exceção em vez de sair"""

    def error(self, message: str):
        raise UsageError(message, {'usage': self.format_usage().strip()})


def _add_run_arguments(parser: argparse.ArgumentParser, l_default: str = "0") -> None:
    parser.add_argument("--m1", type=float, help="Massa da partícula 1")
    parser.add_argument("--m2", type=float, help="Massa da partícula 2")
    parser.add_argument("--sigma", type=float, help="Coeficiente relativístico σ imposto")
    parser.add_argument("--preset", choices=sorted(MASS_PRESETS), help="Preset de massas")
    parser.add_argument("--a", type=float, default=0.15, help="Intensidade a")
    parser.add_argument("--b", type=float, default=0.15, help="Intensidade b")
    parser.add_argument("--beta", type=float, default=0.05, help="Parâmetro de blindagem β")
    parser.add_argument("--energy", type=float, default=1.0, help="Energia E")
    parser.add_argument("--l", default=l_default, help="Canal único ou intervalo lo..hi")


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="Arquivo de saída (padrão: stdout)")


def build_parser() -> argparse.ArgumentParser:
    """Monta o parser com os subcomandos"""
    parser = _Parser(prog="varshni", description="Espalhamento semi-relativístico no potencial de Varshni")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log em nível DEBUG")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    phase = commands.add_parser("phase-shift", help="δ_l, N e λ por canal")
    _add_run_arguments(phase)
    _add_output_arguments(phase)

    bound = commands.add_parser("bound-states", help="Energias dos estados ligados")
    _add_run_arguments(bound)
    bound.add_argument("--n-max", type=int, default=0, help="Maior número quântico radial")
    _add_output_arguments(bound)

    scan = commands.add_parser("scan-beta", help="Busca o β que reproduz a tabela publicada")
    scan.add_argument("--preset", choices=sorted(MASS_PRESETS), default="equal")
    scan.add_argument("--a", type=float, default=0.15)
    scan.add_argument("--b", type=float, default=0.15)
    scan.add_argument("--energy", type=float, default=1.0)
    scan.add_argument("--l", default=f"0..{TABLE_L_MAX}", help="Canais comparados (0..l_max)")
    scan.add_argument("--beta", type=float, nargs="+", help="Grade explícita de β")
    _add_output_arguments(scan)

    table = commands.add_parser("table", help="Coluna equal e unequal lado a lado com a referência")
    table.add_argument("--a", type=float, default=0.15)
    table.add_argument("--b", type=float, default=0.15)
    table.add_argument("--beta", type=float, required=True)
    table.add_argument("--energy", type=float, default=1.0)
    table.add_argument("--l", default=f"0..{TABLE_L_MAX}")
    _add_output_arguments(table)

    validate = commands.add_parser("validate", help="Compara o resultado analítico com o oráculo numérico")
    validate.add_argument("--a", type=float, default=0.15)
    validate.add_argument("--b", type=float, default=0.15)
    validate.add_argument("--energy", type=float, default=1.0)
    validate.add_argument("--l", default="0..5")
    validate.add_argument("--beta", type=float, nargs="+", help="Valores de β (padrão: 0.01 0.025 0.05)")
    validate.add_argument("--perturb-w2", action="store_true",
                          help="Depuração: multiplica w2 por 1.01 na certificação")
    validate.add_argument("--no-exact", action="store_true", help="Omite o diagnóstico do modelo exato")
    _add_output_arguments(validate)
    return parser


def _run_request(args: argparse.Namespace) -> RunRequest:
    return RunRequest(
        m1=args.m1, m2=args.m2, sigma=args.sigma, preset=args.preset,
        a=args.a, b=args.b, beta=args.beta, energy=args.energy, l=args.l,
        n_max=getattr(args, "n_max", 0),
        output_format=args.output_format, out=args.out,
    )


def _render(payload, args: argparse.Namespace, settings: Settings, columns: Sequence[str] = ()) -> str:
    digits = settings.CSV_SIGNIFICANT_DIGITS
    if args.output_format == "json":
        return render_json(payload, digits)
    return render_csv(payload, digits, columns)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _columns(model) -> List[str]:
    return [field.serialization_alias or name for name, field in model.model_fields.items()]


def run(args: argparse.Namespace, settings: Settings, service: SweepService, logging_service: LoggingService) -> int:
    """Executa o subcomando já interpretado e devolve o código de saída"""
    guard = settings.L_RANGE_GUARD

    if args.command == "phase-shift":
        cfg = _run_request(args).to_run_config(guard)
        logging_service.log_computation("phase-shift", beta=cfg.beta, energy=cfg.energy, channels=len(cfg.l_values))
        records = service.phase_shift_records(cfg)
        _emit(_render(records, args, settings, _columns(PhaseShiftRecord)), cfg.out)
        return 0

    if args.command == "bound-states":
        cfg = _run_request(args).to_run_config(guard)
        logging_service.log_computation("bound-states", beta=cfg.beta, n_max=cfg.n_max, channels=len(cfg.l_values))
        records = service.bound_state_records(cfg)
        _emit(_render(records, args, settings, _columns(BoundStateRecord)), cfg.out)
        return 0

    if args.command == "scan-beta":
        l_max = max(parse_l_spec(args.l, guard))
        logging_service.log_computation("scan-beta", preset=args.preset, l_max=l_max)
        report = service.scan_beta(args.preset, args.a, args.b, args.energy, l_max, args.beta)
        payload = report if args.output_format == "json" else report.best_rows
        _emit(_render(payload, args, settings), args.out)
        logging_service.log_info(f"Melhor β={report.best_beta:.6g} ({report.best_coefficient_set}), "
                                 f"padrão reproduzido: {report.pattern_found}")
        return 0

    if args.command == "table":
        l_values = parse_l_spec(args.l, guard)
        logging_service.log_computation("table", beta=args.beta, channels=len(l_values))
        rows = service.table_comparison(args.beta, args.a, args.b, args.energy, l_values)
        _emit(_render(rows, args, settings, _columns(TableRow)), args.out)
        return 0

    if args.command == "validate":
        l_values = parse_l_spec(args.l, guard)
        betas = tuple(args.beta) if args.beta else None
        options = {'betas': betas} if betas else {}
        logging_service.log_computation("validate", channels=len(l_values), perturb_w2=args.perturb_w2)
        report = service.validate(args.a, args.b, args.energy, l_values,
                                  perturb_w2=args.perturb_w2, include_exact=not args.no_exact, **options)
        payload = report if args.output_format == "json" else report.checks
        _emit(_render(payload, args, settings), args.out)
        for family, (passed, worst) in report.family_summary().items():
            logging_service.log_validation(family, passed, worst)
        logging_service.log_info(f"Maior βr nas grades integradas: {report.max_beta_r:.3g}")
        if not report.passed:
            failed = [c.name for c in report.checks if not c.passed]
            raise ValidationFailedError(f"{len(failed)} verificação(ões) acima da tolerância",
                                        {'failed': sorted(set(failed))})
        return 0

    raise UsageError(f"Comando desconhecido: {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ponto de entrada; devolve 0, 1 (uso), 2 (domínio/numérico) ou 3 (validação)"""
    settings = Settings()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e.details.get('usage', '')}\nerro: {e.message}\n")
        return get_exit_code_for_error(e.error_code)

    level = "DEBUG" if args.verbose else settings.LOG_LEVEL
    logging_service = LoggingService(level, settings.LOG_FILE, settings.LOG_TO_FILE)
    try:
        return run(args, settings, SweepService(settings), logging_service)
    except ScatteringError as e:
        logging_service.log_error(e, f"Falha em {args.command}")
        return get_exit_code_for_error(e.error_code)
    except OSError as e:
        logging_service.log_error(e, f"Não foi possível gravar {args.out}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
