/** Raised for unreadable or malformed input files, or unusable label sets. */
export class DataFormatError extends Error {}

/** Raised for invalid evaluation settings. */
export class ConfigError extends Error {}
