import math
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

ROOT_DIR = Path(__file__).parent.parent.parent


class SimulationSettings(BaseModel):
    """
    Configuration settings for the statevector simulator.

    This class groups the knobs that bound how large a simulation may get and
    how strictly the simulator polices numerical drift. It provides a
    convenient method to load these settings from a YAML file (typically
    `simulation.yaml`).

    Attributes:
        max_work_qubits (int): Largest work register the CLI agrees to simulate.
        norm_drift_tolerance (float): Norm drift after a circuit that aborts the run.
        measurement_rng (str): Name of the numpy bit generator used for sampling.
    """

    max_work_qubits: int = Field(
        default=20, ge=1, description="Largest work register to simulate"
    )
    norm_drift_tolerance: float = Field(
        default=1e-8, gt=0, description="Norm drift that aborts a simulation"
    )
    measurement_rng: str = Field(
        default="PCG64", description="numpy bit generator used for measurements"
    )

    @classmethod
    def from_yaml(cls, file_path: Path | None = None) -> "SimulationSettings":
        """
        Load simulation settings from a YAML configuration file.

        Args:
            file_path (Optional[Path]): Path to the simulation.yaml file. If None, uses the default location.

        Returns:
            SimulationSettings: An instance with values loaded from the YAML file, or default values if the file does not exist.
        """
        if file_path is None:
            file_path = Path(__file__).parent / "simulation.yaml"

        if not file_path.exists():
            return cls()

        with open(file_path) as f:
            simulation_config = yaml.safe_load(f)

        return cls(**simulation_config) if simulation_config else cls()


class BinoptConfig(BaseSettings):
    """
    Configuration for the binopt application.

    This class handles loading configuration from:
    1. default.yaml configuration file
    2. .env file
    3. Environment variables

    Values set through the environment (or .env) take precedence over the
    YAML defaults.
    """

    model_config = SettingsConfigDict(
        env_file=ROOT_DIR / ".env", env_file_encoding="utf-8", extra="ignore"
    )

    # App
    LOGGING_LEVEL: str = Field(
        default="INFO", description="Logging level for the application"
    )

    @field_validator("LOGGING_LEVEL")
    @classmethod
    def validate_logging_level(cls, v):
        allowed_levels = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"}
        if isinstance(v, str):
            v_upper = v.upper()
            if v_upper in allowed_levels:
                return v_upper
        raise ValueError(
            f"Invalid LOGGING_LEVEL '{v}'. Must be one of: {', '.join(sorted(allowed_levels))}"
        )

    drop_threshold: float = Field(
        default=1e-14,
        ge=0,
        description="Fourier coefficients with smaller magnitude are dropped from a spectrum",
    )
    iteration_cap: int = Field(
        default=1_000_000,
        ge=1,
        description="Upper bound on amplitude amplification iterations",
    )
    theta_floor: float = Field(
        default=1e-6,
        gt=0,
        description="Distance of theta from 0 or pi below which a run is refused",
    )
    default_scale: float = Field(
        default=math.pi / 2,
        gt=0,
        le=math.pi / 2,
        description="Width of the interval the scaled objective is mapped into",
    )
    problem_scale: float = Field(
        default=math.pi / 4,
        gt=0,
        le=math.pi / 2,
        description="Scale used for qubo and poly problems when none is given; their bounds come from coefficient sums",
    )
    verify_tolerance: float = Field(
        default=1e-9,
        gt=0,
        description="Maximum amplitude deviation accepted by oracle verification",
    )
    symmetrize_qubo: bool = Field(
        default=False,
        description="Replace an asymmetric QUBO matrix by (Q + Q^T)/2 instead of rejecting it",
    )

    simulation: SimulationSettings = Field(
        default_factory=lambda: SimulationSettings.from_yaml(),
        description="Statevector simulator configuration",
    )

    @classmethod
    def from_yaml_and_env(cls) -> "BinoptConfig":
        """
        Load configuration from environment variables and YAML file.

        Returns:
            BinoptConfig: Fully configured instance
        """
        config = cls()

        config_dir = Path(__file__).parent
        with open(config_dir / "default.yaml") as f:
            yaml_config = yaml.safe_load(f)

        return cls._load_from_yaml(config, yaml_config)

    @classmethod
    def _load_from_yaml(cls, config, yaml_config):
        """
        Helper function to load config values from yaml file.

        Fields already provided by the environment keep their value.

        Args:
            config: The config instance built from the environment
            yaml_config: The loaded yaml configuration

        Returns:
            Updated config instance
        """
        if not yaml_config:
            return config

        overrides = {
            field_name: value
            for field_name, value in yaml_config.items()
            if field_name in cls.model_fields
            and field_name not in config.model_fields_set
        }
        if not overrides:
            return config
        return cls(**overrides)


config = BinoptConfig.from_yaml_and_env()
