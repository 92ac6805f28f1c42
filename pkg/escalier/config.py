"""
Configuration management for escalier
"""

from dataclasses import dataclass, fields
from typing import Optional, Union, get_args, get_origin
import os

import yaml

from .errors import ConfigError
from .scalars import Field, field_from_name

FIELD_ENV = "ESCALIER_FIELD"

COMMANDS = ['escalier', 'minbasis', 'aoe', 'verify', 'gen', 'selfcheck']
INPUT_FORMATS = ['auto', 'csv', 'json']
OUTPUT_FORMATS = ['text', 'json', 'csv']
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


@dataclass
class SessionConfig:
    """Configuration for one escalier run"""

    command: str = "aoe"

    # Input/Output
    input_path: str = "-"  # "-" reads stdin
    input_format: str = "auto"  # auto, csv, json
    output_path: Optional[str] = None  # None writes stdout
    output_format: str = "text"  # text, json, csv
    basis_path: Optional[str] = None  # saved aoe JSON for verify

    # Arithmetic
    field: str = "q"  # q or fp:<p>

    # What aoe emits
    emit_factored: bool = True
    emit_expanded: bool = False
    emit_reduced: bool = False
    emit_certificate: bool = False
    show_trace: bool = False

    # Processing
    validate_inputs: bool = True
    parallel: bool = False
    max_workers: int = 4
    show_progress: bool = False

    # Instance generation
    gen_n: int = 3
    gen_points: int = 9
    gen_coord_range: int = 5
    gen_seed: Optional[int] = None

    # Self-check
    selfcheck_instances: int = 100

    # Logging
    enable_logging: bool = False
    log_file: str = "escalier.log"
    log_level: str = "WARNING"

    @classmethod
    def from_yaml(cls, path: str) -> 'SessionConfig':
        """Load configuration from YAML file"""
        if not os.path.exists(path):
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}

        if not isinstance(data, dict):
            raise ConfigError(f"Config file must hold a mapping: {path}")
        known = {f.name: f for f in fields(cls)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ConfigError(f"Unknown config key(s): {', '.join(unknown)}")
        for key, value in data.items():
            cls._check_type(key, known[key].type, value)

        return cls(**data)

    @staticmethod
    def _check_type(key: str, annotation, value):
        """Reject a YAML value whose type does not match its field"""
        allowed = get_args(annotation) if get_origin(annotation) is Union else (annotation,)
        if value is None and type(None) in allowed:
            return
        for expected in allowed:
            if expected is int and isinstance(value, int) and not isinstance(value, bool):
                return
            if expected in (str, bool) and isinstance(value, expected):
                return
        names = " or ".join("null" if t is type(None) else t.__name__ for t in allowed)
        raise ConfigError(f"Config key '{key}' must be {names}, got {type(value).__name__}")

    def to_yaml(self, path: str):
        """Save configuration to YAML file"""
        data = {
            k: v for k, v in self.__dict__.items()
            if not k.startswith('_')
        }

        with open(path, 'w') as f:
            yaml.dump(data, f, default_flow_style=False, sort_keys=False)

    @classmethod
    def from_args(cls, args, base: Optional['SessionConfig'] = None) -> 'SessionConfig':
        """
        Create config from argparse arguments

        Options left unset on the command line keep the value from ``base``
        (a loaded YAML file) or the dataclass default. The field comes from
        --field, then $ESCALIER_FIELD, then the base.
        """
        config = base if base is not None else cls()

        def pick(name, attr=None):
            value = getattr(args, name, None)
            if value is not None:
                setattr(config, attr or name, value)

        config.command = args.command
        pick('input', 'input_path')
        pick('input_format')
        pick('output', 'output_path')
        pick('format', 'output_format')
        pick('basis', 'basis_path')
        pick('workers', 'max_workers')
        pick('log_level')
        pick('n', 'gen_n')
        pick('points', 'gen_points')
        pick('coord_range', 'gen_coord_range')
        pick('seed', 'gen_seed')
        pick('instances', 'selfcheck_instances')

        if getattr(args, 'field', None):
            config.field = args.field
        elif os.environ.get(FIELD_ENV):
            config.field = os.environ[FIELD_ENV]

        if getattr(args, 'parallel', False):
            config.parallel = True
        if getattr(args, 'progress', False):
            config.show_progress = True
        if getattr(args, 'no_validate', False):
            config.validate_inputs = False
        if getattr(args, 'log_file', None):
            config.log_file = args.log_file
            config.enable_logging = True
        if getattr(args, 'no_log_file', False):
            config.enable_logging = False
        if getattr(args, 'trace', False):
            config.show_trace = True

        emits = {
            'expanded': 'emit_expanded',
            'reduced': 'emit_reduced',
            'certificate': 'emit_certificate',
        }
        requested = [attr for flag, attr in emits.items() if getattr(args, flag, False)]
        if requested or getattr(args, 'factored', False):
            config.emit_factored = bool(getattr(args, 'factored', False))
            for attr in emits.values():
                setattr(config, attr, attr in requested)

        return config

    def validate(self):
        """Validate configuration"""
        if self.command not in COMMANDS:
            raise ConfigError(f"Invalid command: {self.command}")

        if self.input_format not in INPUT_FORMATS:
            raise ConfigError(f"Invalid input_format: {self.input_format}")

        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Invalid output_format: {self.output_format}")

        if self.output_format == 'csv' and self.command not in ('escalier', 'minbasis', 'gen'):
            raise ConfigError(f"csv output is not available for {self.command}")

        self.build_field()

        if self.max_workers < 1:
            raise ConfigError("max_workers must be at least 1")

        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"Invalid log_level: {self.log_level}")

        if self.command == 'gen':
            if self.gen_n < 1:
                raise ConfigError("gen_n must be at least 1")
            if self.gen_points < 1:
                raise ConfigError("gen_points must be at least 1")
            if self.gen_coord_range < 1:
                raise ConfigError("gen_coord_range must be at least 1")

        if self.command == 'selfcheck' and self.selfcheck_instances < 1:
            raise ConfigError("selfcheck_instances must be at least 1")

        if self.command not in ('gen', 'selfcheck') and self.input_path != "-" \
                and not os.path.exists(self.input_path):
            raise FileNotFoundError(f"Input file not found: {self.input_path}")

    def build_field(self) -> Field:
        """The coefficient field named by ``field``"""
        return field_from_name(self.field)


def create_default_config(path: str = "escalier_config.yaml"):
    """Create a default configuration file"""
    config = SessionConfig()
    config.to_yaml(path)
    print(f"✅ Created default config: {path}")
