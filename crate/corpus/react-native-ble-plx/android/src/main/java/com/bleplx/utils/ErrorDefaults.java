package com.bleplx.utils;

public final class ErrorDefaults {
  public static final String CODE = "UNKNOWN_ERROR";
  public static final String MESSAGE = "";

  private ErrorDefaults() {
  }
}
