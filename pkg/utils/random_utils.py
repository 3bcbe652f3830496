import numpy as np
from models.simulation_models import GeneratorName

BIT_GENERATORS: dict[GeneratorName, type[np.random.BitGenerator]] = {
    GeneratorName.PHILOX: np.random.Philox,
    GeneratorName.PCG64: np.random.PCG64,
}


def substream(seed: int, generator: GeneratorName = GeneratorName.PHILOX, *key: int) -> np.random.Generator:
    """
    Builds the independent random stream addressed by `key` under a root seed.

    Streams are derived with SeedSequence spawn keys, so the same (seed, generator, key) yields the
    same draws on every platform regardless of the order in which streams are created.

    Args:
        seed (int): Root 64-bit seed.
        generator (GeneratorName, optional): Bit generator family. Defaults to philox.
        *key (int): Stream address, e.g. (sample_index, factor_index).

    Returns:
        np.random.Generator: A generator positioned at the start of the stream.
    """
    seed_sequence: np.random.SeedSequence = np.random.SeedSequence(entropy=seed, spawn_key=tuple(key))
    return np.random.Generator(BIT_GENERATORS[GeneratorName(generator)](seed_sequence))
