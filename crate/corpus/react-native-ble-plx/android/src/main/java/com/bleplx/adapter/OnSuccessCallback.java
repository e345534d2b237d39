package com.bleplx.adapter;

public interface OnSuccessCallback<T> {

  void onSuccess(T data);
}
