package com.bleplx.adapter;

public interface OnEventCallback<T> {

  void onEvent(T data);
}
