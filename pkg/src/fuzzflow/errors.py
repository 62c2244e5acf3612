"""Exception hierarchy shared across the pipeline stages."""


class FuzzflowError(Exception):
    """Base class for all package errors."""


class IndexError_(FuzzflowError):
    """Corpus indexing failed fatally (unreadable root, no translation units)."""


class AmbiguousFunctionError(FuzzflowError):
    """A function name matches several file-local definitions.

    Carries the candidate qualified identifiers so callers can re-query with
    a file qualifier.
    """

    def __init__(self, name: str, candidates: list[str]):
        super().__init__(
            f"function name {name!r} is ambiguous; candidates: {', '.join(candidates)}"
        )
        self.name = name
        self.candidates = candidates


class GatewayError(FuzzflowError):
    """Base for model-gateway failures."""


class ContextBudgetError(GatewayError):
    """Prompt context exceeds the configured window budget (pre-flight)."""


class SchemaValidationError(GatewayError):
    """Backend response failed schema validation even after one repair pass."""

    def __init__(self, message: str, raw_text: str):
        super().__init__(message)
        self.raw_text = raw_text


class ProviderError(GatewayError):
    """Backend transport failed after the configured retries."""


class ConsensusFailureError(GatewayError):
    """Every sample of a self-consistency round failed validation."""


class MetricsError(FuzzflowError):
    """Numeric metric computation impossible (e.g. declaration without body)."""


class SeedBundleEmptyError(FuzzflowError):
    """All seed scripts for a target failed; fuzzer default corpus applies."""


class HarnessBuildError(FuzzflowError):
    """Harness synthesis exhausted its attempt cap without a clean compile."""


class CampaignLaunchError(FuzzflowError):
    """Fuzzing engine could not be started."""

    def __init__(self, message: str, stderr: str = ""):
        super().__init__(message)
        self.stderr = stderr


class FlakyCrashError(FuzzflowError):
    """A crash representative stopped reproducing during replay checks."""


class PatchError(FuzzflowError):
    """Patch proposal or application failed."""


class ConfigError(FuzzflowError):
    """Pipeline configuration invalid (unknown keys, missing paths)."""


class StageOrderError(FuzzflowError):
    """A stage was requested before its prerequisites were checkpointed."""

    def __init__(self, stage: str, missing: str):
        super().__init__(
            f"stage {stage!r} requires completed stage {missing!r}; run it first"
        )
        self.stage = stage
        self.missing = missing
